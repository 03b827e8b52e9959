#pragma once
// Small brute-force reference implementations, deliberately independent of
// the library code paths they check.
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "smooth/recode.hpp"
#include "smooth/typesub.hpp"
#include "smooth/word13.hpp"

namespace oracle {

// Run lengths of a plain symbol string, no window bookkeeping.
inline std::vector<std::pair<char, int>> naive_runs(const std::string& s) {
    std::vector<std::pair<char, int>> out;
    for (char c : s) {
        if (!out.empty() && out.back().first == c) ++out.back().second;
        else out.emplace_back(c, 1);
    }
    return out;
}

// Derivative of a standalone word: the run-length string, with the index
// of the run containing position `origin` reported through `origin_run`.
inline std::string naive_derive(const std::string& s, int origin, int& origin_run) {
    auto rs = naive_runs(s);
    std::string d;
    int pos = 0;
    origin_run = -1;
    for (size_t i = 0; i < rs.size(); ++i) {
        if (pos <= origin && origin < pos + rs[i].second) origin_run = static_cast<int>(i);
        pos += rs[i].second;
        if (rs[i].second != 1 && rs[i].second != 3) throw std::runtime_error("not smooth");
        d.push_back(static_cast<char>('0' + rs[i].second));
    }
    return d;
}

inline std::string expansion_of(const std::string& rec_word) {
    std::string s;
    for (char c : rec_word) {
        char sym = (c == 'A' || c == 'C') ? '1' : '3';
        int len = (c == 'A' || c == 'B') ? 1 : 3;
        s.append(static_cast<size_t>(len), sym);
    }
    return s;
}

inline long long count_in(const std::string& hay, const std::string& needle) {
    long long n = 0;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (hay.compare(i, needle.size(), needle) == 0) ++n;
    return n;
}

// A random smooth window: the expansion of a substitution image, pointed
// at a random position, with full trust.
inline smooth::Word13 random_smooth_window(std::mt19937_64& rng, int bits_len = 5) {
    std::string bits;
    for (int i = 0; i < bits_len; ++i) bits.push_back(static_cast<char>('0' + (rng() & 1)));
    smooth::RecWord seed;
    seed.syms = (rng() & 1) ? "D" : "AD";
    seed.left_complete = seed.right_complete = true;
    smooth::RecWord y = smooth::compose_phi(bits, seed);
    smooth::Word13 x = smooth::expand(y);
    int len = x.size();
    x.lo = -static_cast<int>(rng() % static_cast<unsigned long long>(len));
    return x;
}

inline std::string random_bits(std::mt19937_64& rng, int len) {
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(static_cast<char>('0' + (rng() & 1)));
    return s;
}

} // namespace oracle
