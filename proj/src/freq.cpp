#include "smooth/freq.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace smooth {

bool in_domain(double a, double b, const AlphabetParams& params, double slack) {
    if (a < -slack || b < -slack || a > 0.5 + slack || b > 0.5 + slack) return false;
    if (params.classic() && a + b > 0.75 + 2 * slack) return false;
    return true;
}

void h_eval(int t, double& a, double& b, const AlphabetParams& params) {
    double s = (params.beta - params.alpha) / 2.0;
    double N = params.beta - 2 * s * (a + b);
    double na = ((params.beta + 1) / 4.0 - s * a) / N;
    double nb = ((params.beta - 1) / 4.0 - s * a) / N;
    if (t == 0) {
        a = na;
        b = nb;
    } else {
        a = nb;
        b = na;
    }
}

double h_jacobian_norm(int t, double a, double b, const AlphabetParams& params) {
    (void)t; // the two branches are coordinate swaps of each other
    double s = (params.beta - params.alpha) / 2.0;
    double N = params.beta - 2 * s * (a + b);
    double P = (params.beta + 1) / 4.0 - s * a;
    double Q = (params.beta - 1) / 4.0 - s * a;
    double r1 = (std::abs(-s * N + 2 * s * P) + std::abs(2 * s * P)) / (N * N);
    double r2 = (std::abs(-s * N + 2 * s * Q) + std::abs(2 * s * Q)) / (N * N);
    return std::max(r1, r2);
}

FreqPoint homography_step(int t, const FreqPoint& p, const AlphabetParams& params) {
    params.validate();
    if (!in_domain(p.a, p.b, params, p.err + 1e-9))
        throw DomainViolation("point outside the frequency domain");
    FreqPoint out = p;
    h_eval(t, out.a, out.b, params);
    double kappa;
    if (params.classic()) {
        kappa = 2.0 / 3.0;
    } else {
        // No global constant is proven here; use the largest Jacobian norm
        // over the corners of the error box, with a safety margin.
        kappa = 0;
        for (int dx = -1; dx <= 1; dx += 2)
            for (int dy = -1; dy <= 1; dy += 2)
                kappa = std::max(kappa, h_jacobian_norm(t, p.a + dx * p.err, p.b + dy * p.err, params));
        kappa *= 1.05;
    }
    out.err = p.err * kappa + 1e-15;
    return out;
}

static void apply_word(const std::string& bits, double& a, double& b, const AlphabetParams& params) {
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) h_eval(*it - '0', a, b, params);
}

FreqPoint solve_ab(const TypeSpec& tau, double tol, const AlphabetParams& params) {
    params.validate();
    if (tol <= 0) throw ParseError("tol must be positive");
    if (tau.period.empty()) {
        // Finite spec: nested corner-image box of the prefix maps.
        double xs[4] = {0, 0.5, 0.5, 0};
        double ys[4] = {0, 0, 0.5, 0.5};
        for (int i = 0; i < 4; ++i) apply_word(tau.pre, xs[i], ys[i], params);
        double spread = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                spread = std::max(spread,
                                  std::max(std::abs(xs[i] - xs[j]), std::abs(ys[i] - ys[j])));
        FreqPoint p;
        p.a = (*std::min_element(xs, xs + 4) + *std::max_element(xs, xs + 4)) / 2;
        p.b = (*std::min_element(ys, ys + 4) + *std::max_element(ys, ys + 4)) / 2;
        p.err = spread / 2 + 1e-15;
        return p;
    }
    double a = 0.25, b = 0.25;
    double kappa = params.classic() ? 2.0 / 3.0 : 0.0;
    double diff = 1, prev_diff = 0;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        double pa = a, pb = b;
        apply_word(tau.period, a, b, params);
        prev_diff = diff;
        diff = std::max(std::abs(a - pa), std::abs(b - pb));
        if (!params.classic() && prev_diff > 1e-14)
            kappa = std::max(kappa, diff / prev_diff);
        if (diff < tol) { converged = true; break; }
    }
    if (!converged || (!params.classic() && kappa >= 0.95))
        throw NonConvergence("period map did not contract (measured ratio " +
                             std::to_string(kappa) + ")");
    FreqPoint p{a, b, tol * kappa / (1 - kappa) + 1e-15};
    for (auto it = tau.pre.rbegin(); it != tau.pre.rend(); ++it)
        p = homography_step(*it - '0', p, params);
    return p;
}

double mean_block_length(double a, double b, const AlphabetParams& params) {
    return params.beta - (params.beta - params.alpha) * (a + b);
}

double f_of(double a, double b, const AlphabetParams& params) {
    return (params.beta / 2.0 - (params.beta - params.alpha) * a) / mean_block_length(a, b, params);
}

FreqReport freq_report(const TypeSpec& tau, double tol, const AlphabetParams& params) {
    FreqPoint p = solve_ab(tau, tol, params);
    FreqReport r;
    r.a = p.a;
    r.b = p.b;
    r.c = 0.5 - p.a;
    r.d = 0.5 - p.b;
    r.f_ones = f_of(p.a, p.b, params);
    double df = 0;
    for (int dx = -1; dx <= 1; dx += 2)
        for (int dy = -1; dy <= 1; dy += 2)
            df = std::max(df, std::abs(f_of(p.a + dx * p.err, p.b + dy * p.err, params) - r.f_ones));
    r.err = std::max(p.err, df) + 1e-15;
    return r;
}

double nu_BL(const TypeSpec& tau, int L, double tol, const AlphabetParams& params) {
    if (L < 1) throw ParseError("L must be at least 1");
    double nu = 1;
    for (int l = 1; l <= L; ++l) {
        FreqPoint p = solve_ab(tau.shifted(l), tol, params);
        nu /= mean_block_length(p.a, p.b, params);
    }
    return nu;
}

static double letter_freq(char c, const FreqPoint& p) {
    switch (c) {
    case 'A': return p.a;
    case 'B': return p.b;
    case 'C': return 0.5 - p.a;
    default: return 0.5 - p.b;
    }
}

static long long count_occurrences(const std::string& hay, const std::string& needle) {
    if (needle.empty() || hay.size() < needle.size()) return 0;
    long long n = 0;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (hay.compare(i, needle.size(), needle) == 0) ++n;
    return n;
}

std::vector<FreqValue> pattern_freq_rec_many(const TypeSpec& tau,
                                             const std::vector<std::string>& words,
                                             double tol) {
    AlphabetParams params; // classic only: block counting uses the {1,3} tables
    if (tol <= 0) throw ParseError("tol must be positive");
    size_t m_max = 1;
    for (const std::string& w : words) {
        if (w.empty()) throw ParseError("empty pattern");
        for (char c : w) letter_value(c);
        m_max = std::max(m_max, w.size());
    }
    const char letters[4] = {'A', 'B', 'C', 'D'};
    std::string images[4] = {"A", "B", "C", "D"};
    double nu = 1;
    double letter_err = 0;
    int level = 0;
    while (static_cast<double>(m_max) * nu >= tol ||
           2.0 * static_cast<double>(m_max) * letter_err >= tol) {
        if (tau.known_bits() <= level) break; // finite spec: stop refining, err stays wide
        int t = tau.bit(level);
        std::string next[4];
        for (int i = 0; i < 4; ++i)
            for (char u : phi_image(t, letters[i]))
                next[static_cast<size_t>(i)] += images[static_cast<size_t>(u - 'A')];
        for (int i = 0; i < 4; ++i) images[i] = std::move(next[i]);
        ++level;
        FreqPoint lp = solve_ab(tau.shifted(level), 1e-13, params);
        nu /= mean_block_length(lp.a, lp.b, params);
        letter_err = std::max(letter_err, lp.err);
        size_t total = 0;
        for (int i = 0; i < 4; ++i) total += images[i].size();
        if (total > (1u << 28))
            throw Error("pattern tolerance too small for the block-counting budget");
    }
    FreqPoint lp = solve_ab(tau.shifted(level), 1e-13, params);
    std::vector<FreqValue> out;
    for (const std::string& w : words) {
        double alpha = 0;
        for (int i = 0; i < 4; ++i)
            alpha += letter_freq(letters[i], lp) *
                     static_cast<double>(count_occurrences(images[i], w));
        alpha *= nu;
        double width = static_cast<double>(w.size()) * nu;
        FreqValue v;
        v.value = alpha + width / 2;
        v.err = width / 2 + 2.0 * static_cast<double>(w.size()) * letter_err + 1e-12;
        out.push_back(v);
    }
    return out;
}

FreqValue pattern_freq_rec(const TypeSpec& tau, const std::string& w, double tol) {
    return pattern_freq_rec_many(tau, {w}, tol).front();
}

static void covers_dfs(const std::string& w, size_t iw, std::string& cur, int room,
                       std::vector<std::string>& out) {
    // room = unread symbols left in the current block's expansion
    while (iw < w.size() && room > 0) {
        bool small = letter_is_small(cur.back());
        if ((w[iw] == '1') != small) return;
        ++iw;
        --room;
    }
    if (iw == w.size()) {
        out.push_back(cur);
        return;
    }
    bool small = letter_is_small(cur.back());
    for (char nxt : small ? std::string("BD") : std::string("AC")) {
        cur.push_back(nxt);
        covers_dfs(w, iw, cur, letter_value(nxt), out);
        cur.pop_back();
    }
}

std::vector<std::string> pattern_covers(const std::string& w) {
    if (w.empty()) throw ParseError("empty pattern");
    for (char c : w)
        if (c != '1' && c != '3') throw ParseError("pattern must be over {1,3}");
    std::vector<std::string> out;
    for (char s : std::string("ABCD")) {
        int blen = letter_value(s);
        for (int off = 0; off < blen; ++off) {
            std::string cur(1, s);
            covers_dfs(w, 0, cur, blen - off, out);
        }
    }
    return out;
}

FreqValue pattern_freq_x(const TypeSpec& tau, const std::string& w, double tol) {
    std::vector<std::string> covers = pattern_covers(w);
    FreqPoint p = solve_ab(tau, 1e-13);
    double N = mean_block_length(p.a, p.b, AlphabetParams{});
    FreqValue total;
    if (covers.empty()) return total;
    std::vector<FreqValue> vals =
        pattern_freq_rec_many(tau, covers, tol * N / static_cast<double>(covers.size()));
    for (const FreqValue& v : vals) {
        total.value += v.value / N;
        total.err += v.err / N;
    }
    total.err += 4 * p.err + 1e-12;
    return total;
}

bool minimality(const TypeSpec& tau) {
    if (tau.period.empty()) throw Undecidable("finite spec: tail unknown");
    return tau.period.find('0') != std::string::npos;
}

std::set<char> degenerate_letters(const TypeSpec& tau) {
    if (tau.period.empty()) throw Undecidable("finite spec: tail unknown");
    if (tau.period.find('0') != std::string::npos) return {};
    // tau is eventually all ones; classify by the bits before the 1-tail.
    size_t lastzero = tau.pre.find_last_of('0');
    std::string head = lastzero == std::string::npos ? "" : tau.pre.substr(0, lastzero + 1);
    if (head == "") return {'D'};
    if (head == "0") return {'C'};
    if (head == "10") return {'A'};
    if (head == "00") return {'B'};
    return {};
}

ProbeReport contraction_probe(const AlphabetParams& params, int samples, unsigned long long rng_seed) {
    params.validate();
    if (samples < 1) throw ParseError("samples must be at least 1");
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    auto draw = [&] {
        for (;;) {
            double a = u(rng), b = u(rng);
            if (in_domain(a, b, params)) return std::pair<double, double>(a, b);
        }
    };
    ProbeReport rep;
    rep.samples = samples;
    rep.params = params;
    for (int i = 0; i < samples; ++i) {
        auto [a1, b1] = draw();
        auto [a2, b2] = draw();
        double d0 = std::max(std::abs(a1 - a2), std::abs(b1 - b2));
        if (d0 < 1e-12) continue;
        for (int t = 0; t < 2; ++t) {
            double xa = a1, xb = b1, ya = a2, yb = b2;
            h_eval(t, xa, xb, params);
            h_eval(t, ya, yb, params);
            double d1 = std::max(std::abs(xa - ya), std::abs(xb - yb));
            rep.max_ratio = std::max(rep.max_ratio, d1 / d0);
        }
    }
    for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            double a = 0.5 * i / 100, b = 0.5 * j / 100;
            if (!in_domain(a, b, params)) continue;
            rep.max_jacobian = std::max(rep.max_jacobian, h_jacobian_norm(0, a, b, params));
        }
    return rep;
}

PerronResult perron_oracle(const std::string& period, const AlphabetParams& params) {
    params.validate();
    if (period.empty()) throw ParseError("period must be non-empty");
    double M[4][4] = {};
    for (int i = 0; i < 4; ++i) M[i][i] = 1;
    for (char bit : period) {
        if (bit != '0' && bit != '1') throw ParseError("bad bit in period");
        double Mt[4][4] = {};
        for (int col = 0; col < 4; ++col)
            for (char s : phi_image(bit - '0', static_cast<char>('A' + col), params))
                Mt[s - 'A'][col] += 1;
        double R[4][4] = {};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 4; ++j)
                    R[i][j] += M[i][k] * Mt[k][j];
        std::copy(&R[0][0], &R[0][0] + 16, &M[0][0]);
    }
    double v[4] = {0.25, 0.25, 0.25, 0.25};
    double lambda = 0;
    for (int it = 0; it < 10000; ++it) {
        double w[4] = {};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) w[i] += M[i][j] * v[j];
        double sum = w[0] + w[1] + w[2] + w[3];
        if (sum <= 0) throw NonConvergence("count matrix degenerated");
        double change = 0;
        for (int i = 0; i < 4; ++i) {
            w[i] /= sum;
            change = std::max(change, std::abs(w[i] - v[i]));
            v[i] = w[i];
        }
        lambda = sum;
        if (change < 1e-13 && it > 2) break;
    }
    if (std::abs((v[0] + v[2]) - 0.5) > 1e-10 || std::abs((v[1] + v[3]) - 0.5) > 1e-10)
        throw NonConvergence("eigenvector violates the half-sum balance");
    PerronResult r;
    r.point = FreqPoint{v[0], v[1], 1e-10};
    r.eigenvalue = lambda;
    return r;
}

double empirical_freq(const TypeSpec& tau, const std::string& w, int depth,
                      const AlphabetParams& params) {
    if (w.empty()) throw ParseError("empty pattern");
    std::string bits;
    for (int k = 0; k < depth; ++k) {
        try {
            bits.push_back(static_cast<char>('0' + tau.bit(k)));
        } catch (const SpecTooShort&) {
            break;
        }
    }
    RecWord seed;
    seed.syms = "D";
    seed.left_complete = seed.right_complete = true;
    RecWord y = compose_phi(bits, seed, params);
    bool over_13 = w.find_first_of("13") != std::string::npos;
    std::string hay;
    if (over_13) {
        for (char c : w)
            if (c != '1' && c != '3') throw ParseError("mixed-alphabet pattern");
        if (!params.classic()) throw Error("symbol counting requires the {1,3} alphabet");
        Word13 x = expand(y);
        hay.reserve(x.syms.size());
        for (std::uint8_t s : x.syms) hay.push_back(s == 1 ? '1' : '3');
    } else {
        for (char c : w) letter_value(c);
        hay = y.syms;
    }
    if (hay.empty()) return 0;
    return static_cast<double>(count_occurrences(hay, w)) / static_cast<double>(hay.size());
}

} // namespace smooth
