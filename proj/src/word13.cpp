#include "smooth/word13.hpp"

#include <algorithm>
#include <cstdlib>

namespace smooth {

std::vector<Run> runs(const Word13& w) {
    std::vector<Run> out;
    if (w.empty()) return out;
    int i = w.lo;
    while (i <= w.hi()) {
        int j = i;
        while (j < w.hi() && w.at(j + 1) == w.at(i)) ++j;
        out.push_back(Run{w.at(i), i, j - i + 1, true});
        i = j + 1;
    }
    if (!w.left_complete) out.front().complete = false;
    if (!w.right_complete) out.back().complete = false;
    return out;
}

std::pair<int, int> trusted_interval(const Word13& w) {
    std::vector<Run> rs = runs(w);
    size_t first = 0, last = rs.empty() ? 0 : rs.size() - 1;
    if (!rs.empty() && !rs[first].complete) ++first;
    if (!rs.empty() && !rs[last].complete) --last;
    if (rs.empty() || first > last || last == static_cast<size_t>(-1)) return {0, -1};
    return {rs[first].start, rs[last].start + rs[last].length - 1};
}

static size_t origin_run_index(const std::vector<Run>& rs) {
    for (size_t i = 0; i < rs.size(); ++i)
        if (rs[i].start <= 0 && 0 < rs[i].start + rs[i].length) return i;
    throw OriginRunIncomplete("window does not contain the origin");
}

Word13 derive_window(const Word13& w) {
    if (w.empty()) throw InsufficientWindow("empty window");
    std::vector<Run> rs = runs(w);
    size_t oi = origin_run_index(rs);
    if (rs.size() == 1) {
        if (rs[0].complete) throw NotDifferentiable("window is a single run");
        throw OriginRunIncomplete("window too small around the origin");
    }
    size_t first = 0, last = rs.size() - 1;
    if (!rs[first].complete) ++first;
    if (!rs[last].complete) --last;
    if (first > last) throw OriginRunIncomplete("no trusted runs in the window");
    // An untrusted origin run is dropped like any other edge run; the
    // output indexing still counts from it, so the window may sit strictly
    // left or right of the origin.
    Word13 d;
    d.lo = static_cast<int>(first) - static_cast<int>(oi);
    for (size_t i = first; i <= last; ++i) {
        if (rs[i].length != 1 && rs[i].length != 3)
            throw NotDifferentiable("run of length " + std::to_string(rs[i].length));
        d.syms.push_back(static_cast<std::uint8_t>(rs[i].length));
    }
    // A completeness flag asserts that nothing extends the sequence past
    // that edge, so it survives derivation; dropped edge runs clear it.
    d.left_complete = w.left_complete;
    d.right_complete = w.right_complete;
    return d;
}

int smooth_depth(Word13 w, int max_depth) {
    for (int d = 0; d < max_depth; ++d) {
        try {
            w = derive_window(w);
        } catch (const Error&) {
            return d;
        }
    }
    return max_depth;
}

Word13 integrate(const std::vector<ColumnEntry>& column) {
    const int n = static_cast<int>(column.size());
    if (n == 0) throw ParseError("empty column");
    for (int k = 0; k < n; ++k) {
        if (column[k].value != 1 && column[k].value != 3)
            throw ParseError("column value must be 1 or 3");
        bool need = k + 1 < n && column[k + 1].value > 1;
        if (need) {
            if (column[k].offset < 0 || column[k].offset >= column[k + 1].value)
                throw InconsistentTags("entry " + std::to_string(k) +
                                       " needs an offset in [0," +
                                       std::to_string(column[k + 1].value) + ")");
        } else if (column[k].offset != -1) {
            throw InconsistentTags("entry " + std::to_string(k) + " must not carry an offset");
        }
    }
    // Level n-1 is the single known symbol; expand one level at a time.
    Word13 cur;
    cur.lo = 0;
    cur.syms = {column[n - 1].value};
    for (int k = n - 2; k >= 0; --k) {
        int off = column[k].offset < 0 ? 0 : column[k].offset;
        Word13 next;
        next.lo = -off;
        for (int j = cur.lo; j < 0; ++j) next.lo -= cur.at(j);
        for (int j = cur.lo; j <= cur.hi(); ++j) {
            std::uint8_t sym = (std::abs(j) % 2 == 0) ? column[k].value : complement13(column[k].value);
            for (int t = 0; t < cur.at(j); ++t) next.syms.push_back(sym);
        }
        cur = next;
    }
    // Every reconstructed run has its exact length, so the edges are trusted.
    cur.left_complete = true;
    cur.right_complete = true;
    return cur;
}

std::vector<ColumnEntry> column_extract(const Word13& w, int levels) {
    if (levels <= 0) throw ParseError("levels must be positive");
    std::vector<ColumnEntry> col;
    std::vector<int> offs;
    Word13 cur = w;
    for (int k = 0; k < levels; ++k) {
        if (!cur.contains(0)) throw InsufficientWindow("derivative window lost the origin");
        col.push_back(ColumnEntry{cur.at(0), -1});
        if (k + 1 == levels) break;
        std::vector<Run> rs = runs(cur);
        size_t oi = origin_run_index(rs);
        if (!rs[oi].complete)
            throw InsufficientWindow("window too small for " + std::to_string(levels) + " levels");
        offs.push_back(-rs[oi].start);
        try {
            cur = derive_window(cur);
        } catch (const OriginRunIncomplete&) {
            throw InsufficientWindow("window too small for " + std::to_string(levels) + " levels");
        }
    }
    for (int k = 0; k + 1 < levels; ++k)
        if (col[static_cast<size_t>(k) + 1].value > 1) col[static_cast<size_t>(k)].offset = offs[static_cast<size_t>(k)];
    return col;
}

Word13 extend_left(const Word13& w, int levels) {
    if (w.lo != 0 || w.empty()) throw Error("extend_left requires a window starting at the origin");
    if (levels <= 0) throw ParseError("levels must be positive");
    std::vector<Word13> lv;
    lv.push_back(w);
    lv.back().left_complete = true; // origin run is assumed flush with the window
    for (int k = 1; k < levels; ++k) {
        try {
            lv.push_back(derive_window(lv.back()));
        } catch (const Error& e) {
            throw InsufficientDepth(std::string("cannot take derivative ") + std::to_string(k) +
                                    ": " + e.what());
        }
        lv.back().left_complete = true;
    }
    // Top level: one symbol to the left, the complement of the origin symbol.
    std::vector<std::uint8_t> ext = {complement13(lv.back().syms[0])};
    for (int k = levels - 2; k >= 0; --k) {
        // ext currently lists symbols at indices -1,-2,... of level k+1 in
        // right-to-left order; each is the length of a run of level k.
        std::vector<std::uint8_t> lower;
        std::uint8_t sym = complement13(lv[static_cast<size_t>(k)].syms[0]);
        for (std::uint8_t len : ext) {
            for (int t = 0; t < len; ++t) lower.push_back(sym);
            sym = complement13(sym);
        }
        ext = lower;
    }
    Word13 out;
    out.lo = -static_cast<int>(ext.size());
    out.syms.assign(ext.rbegin(), ext.rend());
    out.syms.insert(out.syms.end(), w.syms.begin(), w.syms.end());
    out.left_complete = false;
    out.right_complete = w.right_complete;
    return out;
}

Word13 parse_word13(const std::string& text) {
    Word13 w;
    int bar = -1;
    for (char c : text) {
        switch (c) {
        case '1': w.syms.push_back(1); break;
        case '3': w.syms.push_back(3); break;
        case '|':
            if (bar >= 0) throw ParseError("more than one origin marker");
            bar = static_cast<int>(w.syms.size());
            break;
        case ' ':
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
    if (w.syms.empty()) throw ParseError("empty word");
    w.lo = bar < 0 ? 0 : -bar;
    if (!w.contains(0)) throw ParseError("origin marker must precede a symbol");
    return w;
}

std::string format_word13(const Word13& w) {
    std::string s;
    for (int i = w.lo; i <= w.hi(); ++i) {
        if (i == 0 && w.lo < 0) s.push_back('|');
        s.push_back(w.at(i) == 1 ? '1' : '3');
    }
    return s;
}

} // namespace smooth
