#pragma once

#include <vector>

#include "fht/function.hpp"

namespace fht {

// Finite Chebyshev series f = sum a_n T_n, n = 0..N.
struct ChebSeries {
    std::vector<double> coeffs;  // a_0 .. a_N

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    // Clenshaw evaluation at t in [-1,1].
    double eval(double t) const;
};

// The n Chebyshev-Gauss points cos((2k+1)pi/2n), strictly inside (-1,1).
struct ChebNodeGrid {
    explicit ChebNodeGrid(int order);
    int order;
    std::vector<double> nodes;  // strictly decreasing
};

// Interpolate f at the Chebyshev-Gauss nodes of the given order.
// Exact (up to roundoff) for polynomial inputs of degree <= order.
ChebSeries fit(const FunctionHandle& f, int order);

// Coefficients of f in the second-kind basis, f = sum c_n U_n, via
// Gauss quadrature with the weight w at second-kind nodes.
std::vector<double> fit_second_kind(const FunctionHandle& f, int order);

// U_n(t), second-kind Chebyshev polynomial.
double eval_u(int n, double t);

// rho_n(t) = T(T_n)(t): the transform of the n-th Chebyshev polynomial,
// by the inhomogeneous three-term recurrence seeded with
// rho_0(t) = (1/pi) log((1-t)/(1+t)).
double fht_cheb_rho(int n, double t);

// sum a_n rho_n(t) = T(f)(t) for the polynomial f = sum a_n T_n.
double fht_series(const ChebSeries& s, double t);

// Same, additionally reporting the largest partial-sum magnitude relative
// to the result (an instability indicator for cancellation-heavy sums).
double fht_series(const ChebSeries& s, double t, double* growth_ratio);

constexpr int kDefaultFitOrder = 64;

}  // namespace fht
