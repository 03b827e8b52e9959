#include "smooth/typesub.hpp"

#include <climits>

namespace smooth {

TypeSpec TypeSpec::parse(const std::string& text) {
    TypeSpec t;
    size_t open = text.find('(');
    std::string pre = text, per;
    if (open != std::string::npos) {
        if (text.back() != ')' || text.find(')') != text.size() - 1)
            throw ParseError("malformed type spec: " + text);
        pre = text.substr(0, open);
        per = text.substr(open + 1, text.size() - open - 2);
        if (per.empty()) throw ParseError("empty period: " + text);
    }
    for (char c : pre + per)
        if (c != '0' && c != '1') throw ParseError(std::string("bad bit '") + c + "'");
    t.pre = pre;
    t.period = per;
    return t;
}

std::string TypeSpec::str() const {
    return period.empty() ? pre : pre + "(" + period + ")";
}

long long TypeSpec::known_bits() const {
    return period.empty() ? static_cast<long long>(pre.size()) : LLONG_MAX;
}

int TypeSpec::bit(long long i) const {
    if (i < 0) throw ParseError("negative bit index");
    if (i < static_cast<long long>(pre.size())) return pre[static_cast<size_t>(i)] - '0';
    if (period.empty())
        throw SpecTooShort("bit " + std::to_string(i) + " of finite spec " + str());
    return period[static_cast<size_t>((i - pre.size()) % period.size())] - '0';
}

TypeSpec TypeSpec::shifted() const {
    TypeSpec t = *this;
    if (!t.pre.empty()) {
        t.pre.erase(t.pre.begin());
    } else if (!t.period.empty()) {
        t.period = t.period.substr(1) + t.period[0];
    } else {
        throw SpecTooShort("cannot shift an empty spec");
    }
    return t;
}

TypeSpec TypeSpec::shifted(int k) const {
    TypeSpec t = *this;
    for (int i = 0; i < k; ++i) t = t.shifted();
    return t;
}

TypeGuess type_of(const RecWord& y, const AlphabetParams& params) {
    ElementaryDecomposition d = elementary_decompose(y, params);
    bool zero = false, one = false;
    for (const ElemBlock& b : d.blocks) {
        if (b.length < 2) continue;
        char head = y.at(b.start);
        (head == 'A' || head == 'D' ? zero : one) = true;
    }
    if (zero && one) throw TypeConflict("blocks of both type families present");
    if (zero) return TypeGuess::zero;
    if (one) return TypeGuess::one;
    return TypeGuess::indeterminate;
}

std::string types_prefix(RecWord y, int depth, const AlphabetParams& params) {
    std::string bits;
    for (int k = 0; k < depth; ++k) {
        TypeGuess g = type_of(y, params);
        if (g == TypeGuess::indeterminate) throw IndeterminateType(k);
        bits.push_back(g == TypeGuess::zero ? '0' : '1');
        if (k + 1 < depth) y = induced_derive(y, params);
    }
    return bits;
}

std::string phi_image(int t, char letter, const AlphabetParams& params) {
    params.validate();
    int reps = letter == 'A' || letter == 'B' ? params.p() : params.q();
    char first, second;
    if (t == 0) {
        // A(BA)^r for the small-value letters, D(CD)^r for the large ones.
        first = letter_is_small(letter) ? 'A' : 'D';
        second = letter_is_small(letter) ? 'B' : 'C';
    } else {
        first = letter_is_small(letter) ? 'B' : 'C';
        second = letter_is_small(letter) ? 'A' : 'D';
    }
    std::string img(1, first);
    for (int i = 0; i < reps; ++i) {
        img.push_back(second);
        img.push_back(first);
    }
    return img;
}

RecWord phi_apply(int t, const RecWord& y, const AlphabetParams& params) {
    check_alternating(y.syms);
    RecWord out;
    out.lo = 0;
    for (int i = y.lo; i <= y.hi(); ++i) {
        std::string img = phi_image(t, y.at(i), params);
        if (i < 0) out.lo -= static_cast<int>(img.size());
        out.syms += img;
    }
    check_alternating(out.syms);
    // Image blocks of neighbouring letters never merge, so the window's
    // edge blocks are genuine.
    out.left_complete = true;
    out.right_complete = true;
    return out;
}

RecWord compose_phi(const std::string& bits, const RecWord& seed, const AlphabetParams& params) {
    RecWord w = seed;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        if (*it != '0' && *it != '1') throw ParseError("bad bit in prefix");
        w = phi_apply(*it - '0', w, params);
    }
    return w;
}

long long reconstruct_shift(const RecWord& y, int L, const AlphabetParams& params) {
    if (L < 0) throw ParseError("L must be non-negative");
    std::string bits = types_prefix(y, L, params);
    RecWord d = y;
    for (int l = 0; l < L; ++l) d = induced_derive(d, params);
    RecWord z = compose_phi(bits, d, params);
    long long range = 1;
    for (int l = 0; l < L; ++l) range *= params.beta;
    long long found = -1;
    for (long long i = 0; i < range; ++i) {
        // Compare y with S^i z on the overlap of their index ranges.
        int zlo = z.lo - static_cast<int>(i), zhi = z.hi() - static_cast<int>(i);
        int lo = std::max(y.lo, zlo), hi = std::min(y.hi(), zhi);
        if (lo > hi || !(lo <= 0 && 0 <= hi)) continue;
        bool ok = true;
        for (int j = lo; j <= hi; ++j)
            if (y.at(j) != z.at(j + static_cast<int>(i))) { ok = false; break; }
        if (!ok) continue;
        if (found >= 0)
            throw InsufficientWindow("shift is not unique on this window");
        found = i;
    }
    if (found < 0) throw NoMatch("no shift of the reconstruction matches the window");
    return found;
}

RecWord canonical_element(const TypeSpec& tau, int n, const AlphabetParams& params) {
    if (!params.classic()) throw Error("canonical construction is defined for {1,3} only");
    if (n < 0) throw ParseError("n must be non-negative");
    if (tau.known_bits() < n) throw SpecTooShort("spec has fewer than n bits");
    RecWord w;
    w.lo = 0;
    w.syms = "D";
    w.left_complete = true;
    w.right_complete = true;
    for (int level = n - 1; level >= 0; --level) {
        int t = tau.bit(level);
        w = phi_apply(t, w, params);
        // Re-point so the origin letter stays D: the middle of CDC for
        // type 1; for type 0 the left D at odd levels, the right one at
        // even levels.
        int i = t == 1 ? 1 : (level % 2 == 1 ? 0 : 2);
        w = shift(w, i);
    }
    return w;
}

} // namespace smooth
