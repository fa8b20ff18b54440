#pragma once

#include <functional>
#include <vector>

#include "fht/function.hpp"

namespace fht {

struct PVResult {
    double value = 0.0;
    double est_error = 0.0;
    int subdivisions = 1;
};

// Adaptive Gauss-Kronrod (7-15) integration of g over [a,b]. The panels are
// pre-split at the given interior points; the worst panel is bisected until
// the absolute error estimate drops below tol. Throws ConvergenceError when
// the panel budget is exhausted. A non-finite panel value yields an infinite
// result (divergence evidence, not an error).
PVResult adaptive_integrate(const std::function<double(double)>& g, double a, double b,
                            double tol, const std::vector<double>& splits = {});

// Panel budget, overridable through the FHT_MAX_PANELS environment variable.
int max_panels();

// T(f)(t) = (1/pi) p.v. int f(x)/(x-t) dx by singularity subtraction:
// the pole is removed analytically via
//   T(f)(t) = (1/pi) [ int (f(x)-f(t))/(x-t) dx + f(t) log((1-t)/(1+t)) ].
// inverse_weight inputs are integrated in the variable x = cos(theta), where
// the add-back term vanishes identically (p.v. int dtheta/(cos theta - t) = 0).
PVResult pv_fht(const FunctionHandle& f, double t, double tol);

// Slow cross-check of pv_fht by symmetric epsilon-excision of the pole.
PVResult pv_fht_excision(const FunctionHandle& f, double t, double tol, double eps);

// Plain definite integral of f over (-1,1), honoring breakpoints and the
// cos(theta) substitution for inverse_weight inputs.
PVResult integral(const FunctionHandle& f, double tol);

}  // namespace fht
