#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "smooth/errors.hpp"

namespace smooth {

// A finite pointed window of a sequence over {1,3}. Indices run over
// [lo, hi] and must contain 0 (the marked origin). left_complete /
// right_complete are caller assertions that the first/last run is not
// truncated by the window edge; without them edge runs are untrusted.
struct Word13 {
    int lo = 0;
    std::vector<std::uint8_t> syms; // values 1 or 3
    bool left_complete = false;
    bool right_complete = false;

    int hi() const { return lo + static_cast<int>(syms.size()) - 1; }
    int size() const { return static_cast<int>(syms.size()); }
    bool empty() const { return syms.empty(); }
    std::uint8_t at(int idx) const { return syms[static_cast<size_t>(idx - lo)]; }
    bool contains(int idx) const { return idx >= lo && idx <= hi(); }
};

inline std::uint8_t complement13(std::uint8_t s) { return s == 1 ? 3 : 1; }

struct Run {
    std::uint8_t symbol;
    int start;  // index of first position
    int length;
    bool complete; // trusted: not cut off by either window edge
};

// Maximal runs left to right. Edge runs are complete only if the matching
// completeness flag is set.
std::vector<Run> runs(const Word13& w);

// Index interval spanned by the complete runs; {0,-1} when none.
std::pair<int, int> trusted_interval(const Word13& w);

// One run-length derivative step. (dx)_0 is the length of the run holding
// position 0; output index n is the run n places after the origin run.
Word13 derive_window(const Word13& w);

// Number of successful derivative steps before derive_window fails,
// capped at max_depth.
int smooth_depth(Word13 w, int max_depth = 64);

// Column entry for integrate/column_extract. offset is the position of the
// level-k origin inside its run as seen one level down; -1 means absent.
// It is present exactly when the next entry's value exceeds 1.
struct ColumnEntry {
    std::uint8_t value;
    int offset = -1;
};

// Rebuild the widest window of x determined by a derivative column
// (entry k gives (d^k x)_0 plus alignment of the level-k origin run).
Word13 integrate(const std::vector<ColumnEntry>& column);

// Inverse of integrate: read the column of depth `levels` above w.
std::vector<ColumnEntry> column_extract(const Word13& w, int levels);

// Given a right-infinite style window (lo == 0) whose derivatives all
// start exactly at their origin run, produce the canonical two-sided
// extension determined by `levels` derivative levels.
Word13 extend_left(const Word13& w, int levels);

// Text format: symbols with an optional '|' before position 0,
// e.g. "333|111333" has lo=-3. No '|' means lo=0.
Word13 parse_word13(const std::string& text);
std::string format_word13(const Word13& w);

} // namespace smooth
