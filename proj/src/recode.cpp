#include "smooth/recode.hpp"

#include <algorithm>

namespace smooth {

int letter_value(char c, const AlphabetParams& params) {
    switch (c) {
    case 'A':
    case 'B': return params.alpha;
    case 'C':
    case 'D': return params.beta;
    default: throw ParseError(std::string("not a run letter: '") + c + "'");
    }
}

bool letter_is_small(char c) { return c == 'A' || c == 'C'; }

void check_alternating(const std::string& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        letter_value(w[i]); // validates the character
        if (letter_is_small(w[i]) == letter_is_small(w[i + 1]))
            throw NotAlternating("letters " + std::to_string(i) + "," + std::to_string(i + 1) +
                                 " encode runs of the same symbol");
    }
    if (!w.empty()) letter_value(w.back());
}

RecWord shift(const RecWord& y, int k) {
    RecWord out = y;
    out.lo -= k;
    if (!out.contains(0)) throw InsufficientWindow("shift moves the origin outside the window");
    return out;
}

RecWord parse_recword(const std::string& text) {
    RecWord y;
    int bar = -1;
    for (char c : text) {
        if (c == '|') {
            if (bar >= 0) throw ParseError("more than one origin marker");
            bar = static_cast<int>(y.syms.size());
        } else if (c == ' ') {
            continue;
        } else {
            letter_value(c);
            y.syms.push_back(c);
        }
    }
    if (y.syms.empty()) throw ParseError("empty word");
    y.lo = bar < 0 ? 0 : -bar;
    if (!y.contains(0)) throw ParseError("origin marker must precede a letter");
    check_alternating(y.syms);
    return y;
}

std::string format_recword(const RecWord& y) {
    std::string s;
    for (int i = y.lo; i <= y.hi(); ++i) {
        if (i == 0 && y.lo < 0) s.push_back('|');
        s.push_back(y.at(i));
    }
    return s;
}

RecWord rec(const Word13& x) {
    std::vector<Run> rs = runs(x);
    size_t oi = 0;
    bool found = false;
    for (size_t i = 0; i < rs.size(); ++i)
        if (rs[i].start <= 0 && 0 < rs[i].start + rs[i].length) { oi = i; found = true; }
    if (!found) throw Error("window does not contain the origin");
    if (!rs[oi].complete) throw NotDifferentiable("origin run touches an untrusted window edge");
    size_t first = 0, last = rs.size() - 1;
    if (!rs[first].complete) ++first;
    if (!rs[last].complete) --last;
    RecWord y;
    y.lo = static_cast<int>(first) - static_cast<int>(oi);
    for (size_t i = first; i <= last; ++i) {
        char c;
        if (rs[i].length == 1) c = rs[i].symbol == 1 ? 'A' : 'B';
        else if (rs[i].length == 3) c = rs[i].symbol == 1 ? 'C' : 'D';
        else throw NotDifferentiable("run of length " + std::to_string(rs[i].length));
        y.syms.push_back(c);
    }
    check_alternating(y.syms);
    y.left_complete = x.left_complete && first == 0;
    y.right_complete = x.right_complete && last == rs.size() - 1;
    return y;
}

Word13 expand(const RecWord& y) {
    Word13 x;
    x.lo = 0;
    for (int i = y.lo; i <= y.hi(); ++i) {
        std::uint8_t sym = letter_is_small(y.at(i)) ? 1 : 3;
        int len = letter_value(y.at(i));
        if (i < 0) x.lo -= len;
        for (int t = 0; t < len; ++t) x.syms.push_back(sym);
    }
    x.left_complete = y.left_complete;
    x.right_complete = y.right_complete;
    return x;
}

ElementaryDecomposition elementary_decompose(const RecWord& y, const AlphabetParams& params) {
    params.validate();
    check_alternating(y.syms);
    if (y.empty()) throw InsufficientWindow("empty word");
    // Maximal groups of letters with equal run-length value; each trusted
    // group is one elementary block and must have length alpha or beta.
    struct Group { int start, len; };
    std::vector<Group> gs;
    int i = y.lo;
    while (i <= y.hi()) {
        int j = i;
        while (j < y.hi() && letter_value(y.at(j + 1), params) == letter_value(y.at(i), params)) ++j;
        gs.push_back(Group{i, j - i + 1});
        i = j + 1;
    }
    // Edge groups may continue beyond the window unless the flags vouch
    // for them, so untrusted edges are dropped from the tiling.
    int first = y.left_complete ? 0 : 1;
    int last = static_cast<int>(gs.size()) - (y.right_complete ? 1 : 2);
    ElementaryDecomposition d;
    if (first > last) {
        d.cov_lo = 0;
        d.cov_hi = -1;
        return d;
    }
    for (int g = first; g <= last; ++g) {
        if (gs[static_cast<size_t>(g)].len != params.alpha &&
            gs[static_cast<size_t>(g)].len != params.beta)
            throw NotDifferentiable("block of length " + std::to_string(gs[static_cast<size_t>(g)].len));
        d.blocks.push_back(ElemBlock{gs[static_cast<size_t>(g)].start, gs[static_cast<size_t>(g)].len});
        if (gs[static_cast<size_t>(g)].start <= 0 && 0 < gs[static_cast<size_t>(g)].start + gs[static_cast<size_t>(g)].len)
            d.origin_block = static_cast<int>(d.blocks.size()) - 1;
    }
    d.cov_lo = d.blocks.front().start;
    d.cov_hi = d.blocks.back().start + d.blocks.back().length - 1;
    return d;
}

static char derived_letter(const RecWord& y, const ElemBlock& b, const AlphabetParams& params) {
    int v = letter_value(y.at(b.start), params);
    bool small_value = v == params.alpha;
    bool short_block = b.length == params.alpha;
    if (small_value) return short_block ? 'A' : 'C';
    return short_block ? 'B' : 'D';
}

RecWord induced_derive(const RecWord& y, const AlphabetParams& params) {
    ElementaryDecomposition d = elementary_decompose(y, params);
    if (d.origin_block < 0) throw OriginBlockIncomplete("origin block is truncated or untrusted");
    RecWord out;
    out.lo = -d.origin_block;
    for (const ElemBlock& b : d.blocks) out.syms.push_back(derived_letter(y, b, params));
    check_alternating(out.syms);
    // A completeness flag asserts that nothing extends the word past that
    // edge, which carries over to the derived word.
    out.left_complete = y.left_complete;
    out.right_complete = y.right_complete;
    return out;
}

// Per-level decomposition tower used by the alignment predicates.
namespace {
struct Tower {
    std::vector<RecWord> words;                 // level 0..L
    std::vector<ElementaryDecomposition> decs;  // level 0..L-1
};

Tower build_tower(const RecWord& y, int L, const AlphabetParams& params) {
    Tower t;
    t.words.push_back(y);
    for (int l = 0; l < L; ++l) {
        t.decs.push_back(elementary_decompose(t.words.back(), params));
        const ElementaryDecomposition& d = t.decs.back();
        if (d.origin_block < 0)
            throw InsufficientWindow("origin block lost at level " + std::to_string(l));
        RecWord next;
        next.lo = -d.origin_block;
        for (const ElemBlock& b : d.blocks)
            next.syms.push_back(derived_letter(t.words.back(), b, params));
        next.left_complete = t.words.back().left_complete;
        next.right_complete = t.words.back().right_complete;
        t.words.push_back(next);
    }
    return t;
}

// Block index (within the decomposition) containing letter position i,
// or -1 when i falls outside the tiled interval.
int block_of(const ElementaryDecomposition& d, long long i) {
    if (d.blocks.empty() || i < d.cov_lo || i > d.cov_hi) return -1;
    size_t lo = 0, hi = d.blocks.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (d.blocks[mid].start <= i) lo = mid;
        else hi = mid - 1;
    }
    return static_cast<int>(lo);
}
} // namespace

std::vector<bool> alignment_flags(const RecWord& y, int L, int n, const AlphabetParams& params) {
    if (L < 0 || n < 0) throw ParseError("L and n must be non-negative");
    Tower t = build_tower(y, L, params);
    std::vector<bool> flags;
    flags.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        long long i = k;
        bool aligned = true;
        for (int l = 0; l < L; ++l) {
            const ElementaryDecomposition& d = t.decs[static_cast<size_t>(l)];
            int b = block_of(d, i);
            if (b < 0) throw InsufficientWindow("shift " + std::to_string(k) +
                                                " leaves trusted territory at level " + std::to_string(l));
            if (d.blocks[static_cast<size_t>(b)].start != i) { aligned = false; break; }
            i = b - d.origin_block;
        }
        flags.push_back(aligned);
    }
    return flags;
}

long long sigma_count(const RecWord& y, int L, long long n, const AlphabetParams& params) {
    if (n < 0) throw ParseError("n must be non-negative");
    Tower t = build_tower(y, L, params);
    // y itself must be well aligned for the count to mean anything.
    for (int l = 0; l < L; ++l)
        if (t.decs[static_cast<size_t>(l)].blocks[static_cast<size_t>(
                t.decs[static_cast<size_t>(l)].origin_block)].start != 0)
            throw DomainViolation("word is not well aligned at level " + std::to_string(l));
    // Count of aligned shifts in [1,n] = image position of n at level L.
    long long i = n;
    for (int l = 0; l < L; ++l) {
        const ElementaryDecomposition& d = t.decs[static_cast<size_t>(l)];
        int b = block_of(d, i);
        if (b < 0) throw InsufficientWindow("position leaves trusted territory at level " +
                                            std::to_string(l));
        i = b - d.origin_block;
    }
    return i;
}

BalanceReport letter_balance(const std::string& w) {
    check_alternating(w);
    BalanceReport r;
    for (char c : w)
        (letter_is_small(c) ? r.ac : r.bd) += 1;
    return r;
}

} // namespace smooth
