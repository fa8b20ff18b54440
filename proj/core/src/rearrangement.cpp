#include "fht/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/quadrature.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double log_2e_over(double t) { return std::log(2.0 * kE / t); }

// A sampling cell: measure plus the sampled |f| value.
struct Cell {
    double measure;
    double value;
};

StepRearrangement from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end(),
              [](const Cell& x, const Cell& y) { return x.value > y.value; });
    StepRearrangement r;
    r.breakpoints.reserve(cells.size() + 1);
    r.levels.reserve(cells.size());
    r.breakpoints.push_back(0.0);
    double acc = 0.0;
    for (const Cell& c : cells) {
        acc += c.measure;
        // merge runs of equal levels
        if (!r.levels.empty() && r.levels.back() == c.value) {
            r.breakpoints.back() = acc;
        } else {
            r.levels.push_back(c.value);
            r.breakpoints.push_back(acc);
        }
    }
    // Cell widths sum to 2 up to roundoff; pin the endpoint.
    r.breakpoints.back() = 2.0;
    return r;
}

}  // namespace

double StepRearrangement::value(double s) const {
    if (s < 0.0 || s >= breakpoints.back()) return 0.0;
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), s);
    size_t idx = static_cast<size_t>(it - breakpoints.begin());
    return levels[std::min(idx - 1, levels.size() - 1)];
}

double StepRearrangement::integral_to(double t) const {
    double acc = 0.0;
    for (size_t i = 0; i < levels.size(); ++i) {
        double lo = breakpoints[i], hi = breakpoints[i + 1];
        if (t <= lo) break;
        acc += levels[i] * (std::min(t, hi) - lo);
    }
    return acc;
}

double StepRearrangement::measure_above(double lambda) const {
    double acc = 0.0;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] > lambda) acc += breakpoints[i + 1] - breakpoints[i];
    }
    return acc;
}

StepRearrangement rearrange(const FunctionHandle& f, int grid) {
    if (grid < 64) throw DomainError("rearrange: grid must be >= 64");
    // Partition edges: uniform base plus geometric refinement towards the
    // endpoints and every breakpoint (transforms of bounded inputs blow up
    // logarithmically there).
    std::vector<double> edges;
    edges.reserve(grid + 1);
    for (int k = 0; k <= grid; ++k) edges.push_back(-1.0 + 2.0 * k / grid);
    const double h = 2.0 / grid;
    std::vector<double> special = f.breakpoints;
    special.push_back(-1.0);
    special.push_back(1.0);
    for (double p : special) {
        for (double o = h / 2; o > 1e-15; o /= 2) {
            if (p + o < 1.0) edges.push_back(p + o);
            if (p - o > -1.0) edges.push_back(p - o);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Cell> cells;
    cells.reserve(edges.size());
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        double width = edges[i + 1] - edges[i];
        if (width <= 0.0) continue;
        double mid = edges[i] + width / 2;
        double v = std::abs(f(mid));
        if (!std::isfinite(v)) {
            throw InvalidInputError("rearrange: non-finite sample", mid);
        }
        cells.push_back({width, v});
    }
    return from_cells(std::move(cells));
}

double norm_lexp(const StepRearrangement& r, double alpha) {
    if (alpha < 0.0) throw DomainError("norm_lexp: alpha must be >= 0");
    if (r.levels.empty()) return 0.0;
    if (alpha == 0.0) return r.levels.front();  // running average peaks at 0+

    double best = 0.0;
    double integral_acc = 0.0;  // int_0^{s_i} f*
    auto ratio = [&](double t, double a, double v) {
        return (a + v * t) / (t * std::pow(log_2e_over(t), alpha));
    };
    for (size_t i = 0; i < r.levels.size(); ++i) {
        const double lo = r.breakpoints[i], hi = r.breakpoints[i + 1];
        const double v = r.levels[i];
        const double a = integral_acc - v * lo;  // >= 0 since levels decrease
        // Endpoints of the segment.
        if (lo > 0.0) best = std::max(best, ratio(lo, a, v));
        best = std::max(best, ratio(hi, a, v));
        // Interior extremum: a*(L(t)-alpha) = alpha*v*t, phi strictly
        // decreasing, so bisection on a sign change suffices.
        auto phi = [&](double t) { return a * (log_2e_over(t) - alpha) - alpha * v * t; };
        double tl = lo > 0.0 ? lo : hi * 1e-12;
        if (phi(tl) > 0.0 && phi(hi) < 0.0) {
            double x0 = tl, x1 = hi;
            for (int it = 0; it < 200 && x1 - x0 > 1e-16 * x1; ++it) {
                double mid = 0.5 * (x0 + x1);
                (phi(mid) > 0.0 ? x0 : x1) = mid;
            }
            best = std::max(best, ratio(0.5 * (x0 + x1), a, v));
        }
        integral_acc += v * (hi - lo);
    }
    return best;
}

double norm_lexp_equiv(const StepRearrangement& r, double alpha) {
    if (alpha < 0.0) throw DomainError("norm_lexp_equiv: alpha must be >= 0");
    if (r.levels.empty()) return 0.0;
    if (alpha == 0.0) return r.levels.front();
    double best = 0.0;
    for (size_t i = 0; i < r.levels.size(); ++i) {
        // f* is right-continuous: the sup on segment i is approached at the
        // right edge, where log(2e/t) is smallest.
        best = std::max(best, r.levels[i] / std::pow(log_2e_over(r.breakpoints[i + 1]), alpha));
    }
    return best;
}

namespace {

// int_p^q log^alpha(2e/t) dt.
double log_power_integral(double p, double q, double alpha) {
    if (q <= p) return 0.0;
    if (alpha == 0.0) return q - p;
    if (alpha == 1.0) {
        auto anti = [](double t) { return t == 0.0 ? 0.0 : t * (log_2e_over(t) + 1.0); };
        return anti(q) - anti(p);
    }
    // t = 2e e^{-u}: integral = 2e int_{u(q)}^{u(p)} u^alpha e^{-u} du.
    double uq = log_2e_over(q);
    double up = p == 0.0 ? uq + 80.0 : std::min(log_2e_over(p), uq + 80.0);
    auto g = [alpha](double u) { return std::pow(u, alpha) * std::exp(-u); };
    return 2.0 * kE * adaptive_integrate(g, uq, up, 1e-12).value;
}

}  // namespace

double norm_llogl(const StepRearrangement& r, double alpha) {
    if (alpha < 0.0) throw DomainError("norm_llogl: alpha must be >= 0");
    double acc = 0.0;
    for (size_t i = 0; i < r.levels.size(); ++i) {
        if (r.levels[i] == 0.0) continue;
        acc += r.levels[i] * log_power_integral(r.breakpoints[i], r.breakpoints[i + 1], alpha);
    }
    return acc;
}

double b_part_ratio(const StepRearrangement& r, double t) {
    if (!(t > 0.0 && t < 2.0)) throw DomainError("b_part_ratio: t must be in (0,2)");
    return r.integral_to(t) / (t * log_2e_over(t));
}

std::vector<std::pair<double, double>> b_part_trend(const StepRearrangement& r, int K) {
    std::vector<std::pair<double, double>> out;
    out.reserve(K);
    double t = 1.0;
    for (int k = 1; k <= K; ++k) {
        t /= 2.0;
        out.emplace_back(t, b_part_ratio(r, t));
    }
    return out;
}

double young_integral(const FunctionHandle& f, double lambda, double tol) {
    if (!(lambda > 0.0)) throw DomainError("young_integral: lambda must be positive");
    auto integrand = [&f, lambda](double x) {
        double u = lambda * std::abs(f(x));
        if (u > 700.0) return std::numeric_limits<double>::infinity();
        return std::expm1(u) - u;
    };
    try {
        PVResult r = adaptive_integrate(integrand, -1.0, 1.0, tol, f.breakpoints);
        return r.value;
    } catch (const ConvergenceError&) {
        // The integrand is nonnegative; failure to converge under the full
        // panel budget is divergence evidence.
        return std::numeric_limits<double>::infinity();
    }
}

NormReport compute_norms(const FunctionHandle& f, double alpha, int grid) {
    StepRearrangement r = rearrange(f, grid);
    NormReport rep;
    rep.alpha = alpha;
    rep.grid_size = grid;
    rep.lexp_primary = norm_lexp(r, alpha);
    rep.lexp_equiv = norm_lexp_equiv(r, alpha);
    rep.llogl = norm_llogl(r, alpha);
    rep.b_part_indicator = b_part_trend(r, 20).back().second;
    return rep;
}

// --- IntervalUnion --------------------------------------------------------

double IntervalUnion::measure() const {
    double acc = 0.0;
    for (const Interval& iv : intervals) acc += iv.b - iv.a;
    return acc;
}

FunctionHandle IntervalUnion::indicator() const {
    FunctionHandle h;
    auto ivs = intervals;
    h.eval = [ivs](double x) {
        for (const Interval& iv : ivs) {
            if (x > iv.a && x < iv.b) return 1.0;
        }
        return 0.0;
    };
    h.tag = SingularityTag::Jump;
    for (const Interval& iv : intervals) {
        if (iv.a > -1.0) h.breakpoints.push_back(iv.a);
        if (iv.b < 1.0) h.breakpoints.push_back(iv.b);
    }
    std::sort(h.breakpoints.begin(), h.breakpoints.end());
    h.name = "chi_A";
    return h;
}

double IntervalUnion::transform(double t) const {
    double acc = 0.0;
    for (const Interval& iv : intervals) {
        acc += std::log(std::abs(iv.b - t)) - std::log(std::abs(iv.a - t));
    }
    return acc / kPi;
}

double IntervalUnion::transform_at_offset(double e, double o) const {
    // t = e + o with |o| possibly far below the position resolution of e.
    double acc = 0.0;
    for (const Interval& iv : intervals) {
        for (int side = 0; side < 2; ++side) {
            double p = side == 0 ? iv.a : iv.b;
            double sign = side == 0 ? -1.0 : 1.0;  // log|b-t| - log|a-t|
            double d = (p == e) ? -o : (p - e) - o;
            acc += sign * std::log(std::abs(d));
        }
    }
    return std::abs(acc / kPi);
}

FunctionHandle IntervalUnion::transform_handle() const {
    FunctionHandle h;
    IntervalUnion self = *this;
    h.eval = [self](double t) { return self.transform(t); };
    h.tag = SingularityTag::Jump;
    for (const Interval& iv : intervals) {
        if (iv.a > -1.0) h.breakpoints.push_back(iv.a);
        if (iv.b < 1.0) h.breakpoints.push_back(iv.b);
    }
    std::sort(h.breakpoints.begin(), h.breakpoints.end());
    h.name = "T(chi_A)";
    return h;
}

StepRearrangement IntervalUnion::transform_rearrangement(int base_grid,
                                                         double min_rel_offset) const {
    std::vector<double> endpoints;
    for (const Interval& iv : intervals) {
        endpoints.push_back(iv.a);
        endpoints.push_back(iv.b);
    }
    std::sort(endpoints.begin(), endpoints.end());

    const double h = 2.0 / base_grid;
    // Refinement radius per endpoint side: half the gap to the neighbor,
    // capped by the base cell size.
    auto radius = [&](size_t i, int dir) {
        double gap;
        if (dir < 0) {
            gap = i == 0 ? endpoints[i] + 1.0 : endpoints[i] - endpoints[i - 1];
        } else {
            gap = i + 1 == endpoints.size() ? 1.0 - endpoints[i]
                                            : endpoints[i + 1] - endpoints[i];
        }
        return std::min(h, gap / 2);
    };

    std::vector<Cell> cells;
    // Offset cells around every endpoint, geometric with ratio 2 down to
    // min_rel_offset of the smallest interval width.
    double min_width = std::numeric_limits<double>::infinity();
    for (const Interval& iv : intervals) min_width = std::min(min_width, iv.b - iv.a);
    for (size_t i = 0; i < endpoints.size(); ++i) {
        for (int dir : {-1, +1}) {
            double R = radius(i, dir);
            if (R <= 0.0) continue;
            double floor_offset = std::max(min_rel_offset * min_width, 1e-290);
            double o = R;
            while (o / 2 > floor_offset) {
                double inner = o / 2;
                cells.push_back({o - inner, transform_at_offset(endpoints[i], dir * 0.75 * o)});
                o = inner;
            }
            cells.push_back({o, transform_at_offset(endpoints[i], dir * 0.5 * o)});
        }
    }
    // Plain cells over the remainder of (-1,1).
    std::vector<std::pair<double, double>> excluded;  // refinement regions
    for (size_t i = 0; i < endpoints.size(); ++i) {
        excluded.emplace_back(endpoints[i] - radius(i, -1), endpoints[i] + radius(i, +1));
    }
    std::vector<double> edges;
    for (int k = 0; k <= base_grid; ++k) edges.push_back(-1.0 + 2.0 * k / base_grid);
    for (auto& [lo, hi] : excluded) {
        edges.push_back(lo);
        edges.push_back(hi);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        double lo = edges[i], hi = edges[i + 1];
        if (hi <= -1.0 || lo >= 1.0 || hi <= lo) continue;
        double mid = 0.5 * (lo + hi);
        bool inside = false;
        for (auto& [xlo, xhi] : excluded) {
            if (mid > xlo && mid < xhi) {
                inside = true;
                break;
            }
        }
        if (inside) continue;
        cells.push_back({hi - lo, std::abs(transform(mid))});
    }
    return from_cells(std::move(cells));
}

}  // namespace fht
