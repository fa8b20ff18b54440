#include "fht/airfoil.hpp"

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/operators.hpp"
#include "fht/quadrature.hpp"

namespace fht {

namespace {
constexpr double kPi = std::numbers::pi;

// sup |T-check(g)| over a coarse interior grid plus points at the given
// distance from the endpoints.
double tcheck_sup(const FunctionHandle& g, double dist, double tol,
                  std::vector<std::string>* annotations) {
    std::vector<double> pts;
    for (int k = 1; k < 16; ++k) pts.push_back(-1.0 + 2.0 * k / 16.0);
    pts.push_back(-1.0 + dist);
    pts.push_back(1.0 - dist);
    FunctionHandle gw = over_weight(g);
    double sup = 0.0;
    for (double t : pts) {
        try {
            sup = std::max(sup, std::abs(weight(t) * pv_fht(gw, t, tol).value));
        } catch (const ConvergenceError& e) {
            sup = std::max(sup, std::abs(weight(t) * e.best_value));
            if (annotations) {
                annotations->push_back("tcheck quadrature did not converge at t=" +
                                       std::to_string(t) +
                                       " (est_error=" + std::to_string(e.est_error) + ")");
            }
        } catch (const SingularPointError&) {
            // grid point landed on a jump of g; skip it
        }
    }
    return sup;
}

// rho_n(cos theta) with the logarithm evaluated in theta. Near theta = 0 or
// pi, cos(theta) saturates at +-1 and loses the distance to the endpoint;
// log(tan(theta/2)) keeps it.
double rho_theta(int n, double theta) {
    double r0 = (2.0 / kPi) * std::log(std::tan(0.5 * theta));
    if (n == 0) return r0;
    // q_n = rho_n - T_n rho_0 satisfies the same recurrence with the same
    // source terms but polynomial (hence bounded) iterates.
    double t = std::cos(theta);
    double qm = 0.0, q = 2.0 / kPi;
    for (int k = 1; k < n; ++k) {
        double ck = (k % 2 == 0) ? 2.0 / (1.0 - double(k) * k) : 0.0;
        double qn = 2.0 * t * q - qm + (2.0 / kPi) * ck;
        qm = q;
        q = qn;
    }
    return std::cos(n * theta) * r0 + q;
}

// Slope of g against log(1 -+ x) at the endpoint, from two samples at
// representable distances. For range functions g = T(f) the slope is
// -+ f(+-1)/pi and the two-point estimate is accurate to O(s log s).
double endpoint_log_slope(const FunctionHandle& g, int sign) {
    const double s1 = 0x1p-30, s2 = 0x1p-44;
    double x1 = sign * (1.0 - s1), x2 = sign * (1.0 - s2);
    return (g(x2) - g(x1)) / (std::log(s2) - std::log(s1));
}

}  // namespace

RangeMembershipReport check_range(const FunctionHandle& g, double tol) {
    RangeMembershipReport rep;
    try {
        rep.phi_value = phi_inv_w(g, std::max(tol / 10, 1e-9));
    } catch (const ConvergenceError& e) {
        rep.phi_value = e.best_value;
        rep.annotations.push_back("phi integral did not converge");
    }
    // The cos(theta) substitution cannot resolve x closer to 1 than machine
    // epsilon, which biases integrals of log-singular integrands by ~1e-8;
    // the phi test cannot be tighter than that resolution floor.
    rep.phi_pass = std::abs(rep.phi_value) <= std::max(tol, 1e-7);

    // Probe sup |T-check(g)| on grids approaching the endpoints.
    for (int k = 2; k <= 8; ++k) {
        double d = std::pow(10.0, -k);
        rep.tcheck_sup_by_refinement.emplace_back(
            d, tcheck_sup(g, d, std::max(tol, 1e-8), &rep.annotations));
    }
    // Classify growth over the refinement sequence: stabilization within 1%
    // means bounded; >= 10% increase per refinement means growing.
    const auto& seq = rep.tcheck_sup_by_refinement;
    bool stable = true, growing = true;
    for (size_t i = seq.size() - 3; i + 1 < seq.size(); ++i) {
        double prev = seq[i].second, next = seq[i + 1].second;
        double rel = (next - prev) / std::max(std::abs(prev), 1e-300);
        if (std::abs(rel) > 0.01) stable = false;
        if (rel < 0.10) growing = false;
    }
    rep.boundedness_verdict = stable ? "bounded" : (growing ? "growing" : "inconclusive");
    rep.overall = rep.phi_pass && rep.boundedness_verdict == "bounded";
    return rep;
}

AirfoilSolution solve(const FunctionHandle& g, double tol, bool force, int fit_order) {
    AirfoilSolution sol;
    sol.membership = check_range(g, tol);
    if (!sol.membership.overall && !force) {
        throw DomainError(
            "solve: input failed the range test (phi=" +
            std::to_string(sol.membership.phi_value) + ", boundedness " +
            sol.membership.boundedness_verdict + "); pass force to solve anyway");
    }

    // Coefficients of f = T-check(g) by projection: with T antisymmetric
    // under the plain pairing and T(T_n) = rho_n,
    //   a_n = (2/pi) int f T_n / w = (2/pi) int g rho_n / w,
    // an ordinary integral with no principal value. Two refinements make it
    // accurate at the endpoints, where cos(theta) saturates and would bias
    // log-singular integrands by ~1e-8 per coefficient:
    //  * subtract the endpoint log parts of g as c0 rho_0 + c1 rho_1, whose
    //    exact preimages 1 and x are added back to the coefficients;
    //  * evaluate rho_n through theta, where the singularity is explicit.
    double qtol = std::max(tol, 1e-10);
    const double bp = endpoint_log_slope(g, +1);
    const double bm = endpoint_log_slope(g, -1);
    const double c0 = 0.5 * kPi * (bp - bm);
    const double c1 = 0.5 * kPi * (bp + bm);
    auto g_flat = [&g, c0, c1](double x) {
        return g(x) - c0 * fht_cheb_rho(0, x) - c1 * fht_cheb_rho(1, x);
    };
    std::vector<double> splits;
    for (double b : g.breakpoints) splits.push_back(std::acos(std::clamp(b, -1.0, 1.0)));

    auto project = [&](int n) {
        auto integrand = [&](double theta) {
            const double lim = std::nextafter(1.0, 0.0);
            double x = std::clamp(std::cos(theta), -lim, lim);
            double base = (n < 0) ? 1.0 : rho_theta(n, theta);
            return g_flat(x) * base;
        };
        for (double ctol = qtol;; ctol *= 10) {
            try {
                return adaptive_integrate(integrand, 0.0, kPi, ctol, splits).value;
            } catch (const ConvergenceError& e) {
                if (ctol >= 1e-7) return e.best_value;
            }
        }
    };

    sol.solution.coeffs.assign(std::max(fit_order + 1, 2), 0.0);
    for (int n = 0; n <= fit_order; ++n) {
        sol.solution.coeffs[n] = ((n == 0) ? 1.0 : 2.0) / kPi * project(n);
    }
    sol.solution.coeffs[0] += c0;  // T-check(rho_0) = 1
    sol.solution.coeffs[1] += c1;  // T-check(rho_1) = x
    // Q(g) through the same subtraction; Q annihilates rho_0 and rho_1.
    sol.defect = project(-1) / kPi;

    // Residual of T(f) - g on 201 interior Chebyshev points, spectral side
    // for T(f). For forced non-range inputs T(f) = g - Q(g) chi, so the
    // residual approaches the constant defect |Q(g)|.
    ChebNodeGrid check(201);
    double sup = 0.0;
    for (double t : check.nodes) {
        double r = fht_series(sol.solution, t) - g(t);
        sup = std::max(sup, std::abs(r));
    }
    sol.residual_sup = sup;
    return sol;
}

double holder_bound(double K, double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw DomainError("holder_bound: lambda must lie in (0,1]");
    }
    if (!(K > 0.0)) throw DomainError("holder_bound: K must be positive");
    double logbeta = std::lgamma(0.5) + std::lgamma(lambda) - std::lgamma(lambda + 0.5);
    return (2.0 / kPi) * K * std::exp(logbeta);
}

}  // namespace fht
