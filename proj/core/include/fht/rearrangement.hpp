#pragma once

#include <vector>

#include "fht/function.hpp"

namespace fht {

// Right-continuous decreasing step function on [0,2): the decreasing
// rearrangement f* of |f|. Segment i carries level levels[i] on
// [breakpoints[i], breakpoints[i+1]).
struct StepRearrangement {
    std::vector<double> breakpoints;  // 0 = s_0 < s_1 < ... < s_m = 2
    std::vector<double> levels;       // v_1 >= ... >= v_m >= 0

    double value(double s) const;        // f*(s)
    double integral_to(double t) const;  // int_0^t f*
    double total_measure() const { return breakpoints.back(); }
    // Measure of {s : value(s) > lambda}.
    double measure_above(double lambda) const;
};

// Sorted-sample approximation of f* on a cell partition of (-1,1). The
// partition is uniform with `grid` base cells plus geometric refinement
// near the endpoints and near f's breakpoints, where the transforms of
// interest blow up logarithmically.
StepRearrangement rearrange(const FunctionHandle& f, int grid);

constexpr int kDefaultRearrangeGrid = 4096;

// sup_{0<t<=2} (int_0^t f*) / (t log^alpha(2e/t)).  Exact on steps: the
// per-segment extremum equation is solved by bisection.
double norm_lexp(const StepRearrangement& r, double alpha);

// sup_t f*(t) / log^alpha(2e/t), the equivalent norm. Exact on steps.
double norm_lexp_equiv(const StepRearrangement& r, double alpha);

// int_0^2 f*(t) log^alpha(2e/t) dt, with closed-form antiderivatives for
// alpha in {0,1} and quadrature otherwise.
double norm_llogl(const StepRearrangement& r, double alpha);

// The ratio (int_0^t f*) / (t log(2e/t)) whose vanishing as t -> 0
// characterizes membership in the absolutely-continuous part of the
// exponential Zygmund space.
double b_part_ratio(const StepRearrangement& r, double t);

// The ratio along the dyadic sequence t = 2^-k, k = 1..K.
std::vector<std::pair<double, double>> b_part_trend(const StepRearrangement& r, int K);

// int Phi(lambda |f|) with the Young function Phi(u) = e^u - u - 1.
// Divergence is reported as +infinity (non-membership evidence).
double young_integral(const FunctionHandle& f, double lambda, double tol = 1e-9);

struct NormReport {
    double alpha = 1.0;
    double lexp_primary = 0.0;
    double lexp_equiv = 0.0;
    double llogl = 0.0;
    double b_part_indicator = 0.0;  // ratio at the last dyadic point probed
    int grid_size = 0;
};

NormReport compute_norms(const FunctionHandle& f, double alpha,
                         int grid = kDefaultRearrangeGrid);

// A finite union of disjoint open subintervals of (-1,1). The transform of
// its characteristic function has the closed form
//   T(chi_A)(t) = (1/pi) sum_i log|(b_i - t)/(a_i - t)|,
// which permits rearrangement sampling at offsets far below double position
// resolution (offsets are carried exactly relative to the nearest endpoint).
struct IntervalUnion {
    struct Interval {
        double a, b;
    };
    std::vector<Interval> intervals;  // sorted, disjoint

    double measure() const;
    FunctionHandle indicator() const;
    double transform(double t) const;
    // |T(chi_A)| evaluated at signed offset `o` from endpoint `e`.
    double transform_at_offset(double e, double o) const;
    FunctionHandle transform_handle() const;

    // Rearrangement of |T(chi_A)| with geometric offset cells shrinking to
    // min_rel_offset times the local scale around every interval endpoint.
    StepRearrangement transform_rearrangement(int base_grid,
                                              double min_rel_offset = 1e-60) const;
};

}  // namespace fht
