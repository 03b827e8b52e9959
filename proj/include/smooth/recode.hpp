#pragma once
#include <string>
#include <vector>

#include "smooth/params.hpp"
#include "smooth/word13.hpp"

namespace smooth {

// Pointed word over the run alphabet {A,B,C,D}. A and C encode runs of the
// small symbol, B and D runs of the large one; A,B are short runs (length
// alpha), C,D long ones (length beta). Indexing and completeness flags work
// exactly as in Word13.
struct RecWord {
    int lo = 0;
    std::string syms; // letters 'A'..'D'
    bool left_complete = false;
    bool right_complete = false;

    int hi() const { return lo + static_cast<int>(syms.size()) - 1; }
    int size() const { return static_cast<int>(syms.size()); }
    bool empty() const { return syms.empty(); }
    char at(int idx) const { return syms[static_cast<size_t>(idx - lo)]; }
    bool contains(int idx) const { return idx >= lo && idx <= hi(); }
};

// Run length encoded by a letter: A,B -> alpha; C,D -> beta.
int letter_value(char c, const AlphabetParams& params = {});
// Symbol class: true for letters encoding runs of the small symbol (A,C).
bool letter_is_small(char c);
void check_alternating(const std::string& w);

// S^k: re-point the origin k places to the right (no new symbols).
RecWord shift(const RecWord& y, int k);

RecWord parse_recword(const std::string& text);
std::string format_recword(const RecWord& y);

// One {1,3} run per letter of the encoding; index 0 encodes the run
// containing position 0.
RecWord rec(const Word13& x);
// Expansion back to {1,3}; only defined for the classic alphabet.
Word13 expand(const RecWord& y);

struct ElemBlock {
    int start;  // index of the block's first letter
    int length; // alpha or beta
};
struct ElementaryDecomposition {
    std::vector<ElemBlock> blocks; // trusted blocks, left to right
    int origin_block = -1;         // index into blocks of the block holding 0, -1 if outside
    int cov_lo = 0, cov_hi = -1;   // letter interval tiled by the blocks
};

ElementaryDecomposition elementary_decompose(const RecWord& y, const AlphabetParams& params = {});
RecWord induced_derive(const RecWord& y, const AlphabetParams& params = {});

// flags[k-1] = whether S^k y is well aligned through L derivative levels,
// for k = 1..n.
std::vector<bool> alignment_flags(const RecWord& y, int L, int n, const AlphabetParams& params = {});
// Number of well-aligned shifts among S^1..S^n; requires y itself aligned.
long long sigma_count(const RecWord& y, int L, long long n, const AlphabetParams& params = {});

struct BalanceReport {
    long long ac = 0; // |w|_A + |w|_C
    long long bd = 0; // |w|_B + |w|_D
};
BalanceReport letter_balance(const std::string& w);

} // namespace smooth
