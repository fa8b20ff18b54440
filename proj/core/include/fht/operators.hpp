#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fht/chebyshev.hpp"
#include "fht/function.hpp"

namespace fht {

enum class Method { Spectral, Quadrature, Auto };

struct OperatorRequest {
    FunctionHandle input;
    std::vector<double> points;  // distinct, all in (-1,1)
    Method method = Method::Auto;
    double tol = 1e-10;
    int fit_order = kDefaultFitOrder;
};

struct PointValue {
    double point;
    double value;
};

struct OperatorResult {
    std::vector<PointValue> values;  // aligned with request points
    Method method_used = Method::Quadrature;
    double est_error = 0.0;
    std::map<std::string, std::string> diagnostics;
};

// T(f): the finite Hilbert transform. Spectral path fits a Chebyshev series
// and sums rho_n; quadrature path uses the PV oracle. Auto picks spectral
// for smooth inputs, quadrature otherwise.
OperatorResult apply_T(const OperatorRequest& req);

// T-check(f) = -w(t) T(f/w)(t). Spectral identity: with f = sum b_n T_n,
// T-check(f)(t) = -w(t) sum_{n>=1} b_n U_{n-1}(t); the b_0 term is dropped
// because T(1/w) = 0 (the one-dimensional kernel span(1/w)).
OperatorResult apply_T_check(const OperatorRequest& req);

// T-hat(f) = -(1/w(t)) T(w f)(t). Spectral identity via T(w U_n) = -T_{n+1}
// on the second-kind fit of f. Points must stay at least 1e-6 away from
// the endpoints (division by w).
OperatorResult apply_T_hat(const OperatorRequest& req);

// Q(f) = (1/pi) int f/w: the coefficient of the rank-one projection of f
// onto span(chi). The same formula serves on the exponential Zygmund class.
double apply_Q(const FunctionHandle& f, double tol = 1e-10);

// phi(g) = int g/w, the functional whose kernel contains the range of T.
double phi_inv_w(const FunctionHandle& g, double tol = 1e-10);

// Convenience: true when |phi(g)| <= tol.
bool in_kernel_phi(const FunctionHandle& g, double tol);

// Closed form of T(chi_(a,b))(t) = (1/pi) log|(b-t)/(a-t)| restricted to
// (a,b) inside [-1,1].
double fht_indicator(double a, double b, double t);

}  // namespace fht
