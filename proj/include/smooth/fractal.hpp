#pragma once
#include <array>
#include <string>
#include <vector>

#include "smooth/freq.hpp"

namespace smooth {

struct Pt {
    double x = 0, y = 0;
};

// Image of the square K = [0,1/2]^2 under h_{b0} o ... o h_{bn-1}; a
// quadrilateral since each branch is linear-fractional. Corner order
// follows K's corners (0,0), (1/2,0), (1/2,1/2), (0,1/2).
struct FractalCell {
    std::string prefix;
    std::array<Pt, 4> corners;
};

struct FreqInterval {
    double lo = 0, hi = 0;
};

// All 2^n rank-n cells in lexicographic prefix order. Straight-edge images
// are cross-checked on edge midpoints.
std::vector<FractalCell> enumerate_cells(int n, const AlphabetParams& params = {},
                                         long long budget = 1 << 20);

// [min, max] of the symbol-frequency map f over the cell (attained at
// corners; guarded by an edge-midpoint check).
FreqInterval project_to_F(const FractalCell& cell, const AlphabetParams& params = {});

// (lower, upper) bracket for sup of F intersected with [0, 1/2] or [0, 1].
std::pair<double, double> sup_estimate(int n, bool half_domain, long long budget = 1 << 20);

std::string emit_csv(const std::vector<FractalCell>& cells, const AlphabetParams& params = {});
std::string emit_svg(const std::vector<FractalCell>& cells, const AlphabetParams& params = {});
std::string emit_json(const std::vector<FractalCell>& cells, const AlphabetParams& params = {});

} // namespace smooth
