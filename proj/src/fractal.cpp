#include "smooth/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace smooth {

namespace {
Pt map_point(const std::string& prefix, Pt p, const AlphabetParams& params) {
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
        h_eval(*it - '0', p.x, p.y, params);
    return p;
}

double dist_to_segment(Pt p, Pt a, Pt b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double wx = p.x - a.x, wy = p.y - a.y;
    double vv = vx * vx + vy * vy;
    double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    double dx = wx - t * vx, dy = wy - t * vy;
    return std::sqrt(dx * dx + dy * dy);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}
} // namespace

std::vector<FractalCell> enumerate_cells(int n, const AlphabetParams& params, long long budget) {
    params.validate();
    if (n < 1) throw ParseError("rank must be at least 1");
    if (n >= 62 || (1LL << n) > budget)
        throw BudgetExceeded("rank " + std::to_string(n) + " exceeds the cell budget");
    const Pt K[4] = {{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}};
    const Pt mid[4] = {{0.25, 0}, {0.5, 0.25}, {0.25, 0.5}, {0, 0.25}};
    std::vector<FractalCell> cells;
    cells.reserve(static_cast<size_t>(1) << n);
    for (long long code = 0; code < (1LL << n); ++code) {
        FractalCell c;
        for (int i = n - 1; i >= 0; --i)
            c.prefix.push_back(static_cast<char>('0' + ((code >> i) & 1)));
        for (int i = 0; i < 4; ++i) c.corners[static_cast<size_t>(i)] = map_point(c.prefix, K[i], params);
        // Linear-fractional maps send segments to segments; spot-check on
        // the edge midpoints.
        for (int i = 0; i < 4; ++i) {
            Pt m = map_point(c.prefix, mid[i], params);
            if (dist_to_segment(m, c.corners[static_cast<size_t>(i)],
                                c.corners[static_cast<size_t>((i + 1) % 4)]) > 1e-12)
                throw Error("edge image failed the straightness check");
        }
        cells.push_back(std::move(c));
    }
    return cells;
}

FreqInterval project_to_F(const FractalCell& cell, const AlphabetParams& params) {
    FreqInterval iv;
    double vals[4];
    for (int i = 0; i < 4; ++i)
        vals[i] = f_of(cell.corners[static_cast<size_t>(i)].x, cell.corners[static_cast<size_t>(i)].y, params);
    iv.lo = *std::min_element(vals, vals + 4);
    iv.hi = *std::max_element(vals, vals + 4);
    // f is linear-fractional along each straight edge, hence monotone
    // there; edge midpoints must stay inside the corner range.
    for (int i = 0; i < 4; ++i) {
        const Pt& a = cell.corners[static_cast<size_t>(i)];
        const Pt& b = cell.corners[static_cast<size_t>((i + 1) % 4)];
        double fm = f_of((a.x + b.x) / 2, (a.y + b.y) / 2, params);
        if (fm < iv.lo - 1e-9 || fm > iv.hi + 1e-9)
            throw Error("midpoint escaped the corner range");
    }
    return iv;
}

std::pair<double, double> sup_estimate(int n, bool half_domain, long long budget) {
    AlphabetParams params;
    double dmax = half_domain ? 0.5 : 1.0;
    double lower = 0, upper = 0;
    for (const FractalCell& cell : enumerate_cells(n, params, budget)) {
        FreqInterval iv = project_to_F(cell, params);
        // A cell contains realizable frequency pairs, so some value in
        // [iv.lo, iv.hi] is attained; when the whole interval fits under
        // dmax, iv.lo is a certified lower bound for the restricted sup.
        if (iv.hi <= dmax) lower = std::max(lower, iv.lo);
        if (iv.lo <= dmax) upper = std::max(upper, iv.hi);
    }
    return {lower, upper};
}

std::string emit_csv(const std::vector<FractalCell>& cells, const AlphabetParams& params) {
    std::string out = "prefix,ax,ay,bx,by,cx,cy,dx,dy,f_lo,f_hi\n";
    for (const FractalCell& c : cells) {
        FreqInterval iv = project_to_F(c, params);
        out += c.prefix;
        for (const Pt& p : c.corners) out += "," + fmt(p.x) + "," + fmt(p.y);
        out += "," + fmt(iv.lo) + "," + fmt(iv.hi) + "\n";
    }
    return out;
}

std::string emit_svg(const std::vector<FractalCell>& cells, const AlphabetParams& params) {
    (void)params;
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 0.5 0.5\" "
        "width=\"600\" height=\"600\">\n"
        "<rect x=\"0\" y=\"0\" width=\"0.5\" height=\"0.5\" fill=\"white\" "
        "stroke=\"black\" stroke-width=\"0.002\"/>\n";
    for (const FractalCell& c : cells) {
        out += "<polygon points=\"";
        for (size_t i = 0; i < 4; ++i) {
            if (i) out += " ";
            // flip y so the origin sits bottom-left as in the plots
            out += fmt(c.corners[i].x) + "," + fmt(0.5 - c.corners[i].y);
        }
        out += "\" fill=\"steelblue\" fill-opacity=\"0.35\" stroke=\"navy\" "
               "stroke-width=\"0.0005\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string emit_json(const std::vector<FractalCell>& cells, const AlphabetParams& params) {
    std::string out = "[";
    bool first = true;
    for (const FractalCell& c : cells) {
        FreqInterval iv = project_to_F(c, params);
        if (!first) out += ",";
        first = false;
        out += "\n{\"prefix\":\"" + c.prefix + "\",\"corners\":[";
        for (size_t i = 0; i < 4; ++i) {
            if (i) out += ",";
            out += "[" + fmt(c.corners[i].x) + "," + fmt(c.corners[i].y) + "]";
        }
        out += "],\"f\":[" + fmt(iv.lo) + "," + fmt(iv.hi) + "]}";
    }
    out += "\n]\n";
    return out;
}

} // namespace smooth
