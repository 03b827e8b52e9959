#pragma once
#include <set>
#include <string>
#include <vector>

#include "smooth/typesub.hpp"

namespace smooth {

// Letter-frequency pair with a certified infinity-norm radius.
struct FreqPoint {
    double a = 0;
    double b = 0;
    double err = 0;
};

// Domain E = {(a,b) in [0,1/2]^2 : a+b <= 3/4} for the classic alphabet,
// the full square K = [0,1/2]^2 otherwise.
bool in_domain(double a, double b, const AlphabetParams& params = {}, double slack = 0);

// Raw evaluation of the branch-t homography (no domain check).
void h_eval(int t, double& a, double& b, const AlphabetParams& params = {});
// Operator norm of the Jacobian of h_t at (a,b) in the infinity norm.
double h_jacobian_norm(int t, double a, double b, const AlphabetParams& params = {});

// Checked application with pessimistic error propagation.
FreqPoint homography_step(int t, const FreqPoint& p, const AlphabetParams& params = {});

// The frequency pair (a(tau), b(tau)). Periodic part: fixed-point iteration
// of the composed period map; empty period: nested corner-image box.
FreqPoint solve_ab(const TypeSpec& tau, double tol = 1e-12, const AlphabetParams& params = {});

struct FreqReport {
    double a = 0, b = 0, c = 0, d = 0;
    double f_ones = 0;
    double err = 0;
};
FreqReport freq_report(const TypeSpec& tau, double tol = 1e-12, const AlphabetParams& params = {});

// Frequency of symbol alpha as a function of the letter pair.
double f_of(double a, double b, const AlphabetParams& params = {});
// Mean elementary-block length alpha(a+b) + beta(c+d).
double mean_block_length(double a, double b, const AlphabetParams& params = {});

// nu(B^L) = prod_{l=1..L} 1 / mean_block_length(level l).
double nu_BL(const TypeSpec& tau, int L, double tol = 1e-12, const AlphabetParams& params = {});

struct FreqValue {
    double value = 0;
    double err = 0;
};

// Frequency of the letter word w (over ABCD) in the recoded system,
// bracketed through block counting at increasing levels. err < tol/2
// on return. Classic alphabet only.
FreqValue pattern_freq_rec(const TypeSpec& tau, const std::string& w, double tol = 1e-6);
// Batched form sharing the per-level letter images across words.
std::vector<FreqValue> pattern_freq_rec_many(const TypeSpec& tau,
                                             const std::vector<std::string>& words,
                                             double tol = 1e-6);

// Frequency of the symbol word w (over {1,3}) in the underlying system.
FreqValue pattern_freq_x(const TypeSpec& tau, const std::string& w, double tol = 1e-6);
// The block-word covers of w used by pattern_freq_x, for inspection.
std::vector<std::string> pattern_covers(const std::string& w);

// True iff the subshift of tau is minimal (period contains a 0).
bool minimality(const TypeSpec& tau);
// Letters of frequency zero; nonempty only for the four exceptional tau.
std::set<char> degenerate_letters(const TypeSpec& tau);

struct ProbeReport {
    double max_ratio = 0;    // sampled Lipschitz ratio, both branches
    double max_jacobian = 0; // Jacobian corner norm over a grid
    int samples = 0;
    AlphabetParams params;
};
ProbeReport contraction_probe(const AlphabetParams& params, int samples, unsigned long long rng_seed);

struct PerronResult {
    FreqPoint point;
    double eigenvalue = 0;
};
// Dominant eigenvector of the letter-count matrix of the period's
// substitution composition, normalized to letter frequencies.
PerronResult perron_oracle(const std::string& period, const AlphabetParams& params = {});

// Sliding count of w (either alphabet) in the depth-fold substitution
// prefix seeded with D, divided by the length counted over.
double empirical_freq(const TypeSpec& tau, const std::string& w, int depth,
                      const AlphabetParams& params = {});

} // namespace smooth
