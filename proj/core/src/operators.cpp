#include "fht/operators.hpp"

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"
#include "fht/quadrature.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

Method resolve(const OperatorRequest& req) {
    if (req.method != Method::Auto) return req.method;
    return req.input.tag == SingularityTag::Smooth ? Method::Spectral : Method::Quadrature;
}

void check_points(const std::vector<double>& pts) {
    for (double t : pts) {
        if (!(std::abs(t) < 1.0)) throw DomainError("operator request: point outside (-1,1)");
    }
}

std::string point_tag(double t) { return "t=" + std::to_string(t); }

}  // namespace

OperatorResult apply_T(const OperatorRequest& req) {
    check_points(req.points);
    OperatorResult out;
    Method m = resolve(req);
    out.method_used = m;
    if (m == Method::Spectral) {
        if (req.input.tag != SingularityTag::Smooth) {
            throw DomainError("apply_T: spectral method requires a smooth input");
        }
        ChebSeries s = fit(req.input, req.fit_order);
        double worst_growth = 1.0;
        for (double t : req.points) {
            double growth = 1.0;
            out.values.push_back({t, fht_series(s, t, &growth)});
            worst_growth = std::max(worst_growth, growth);
        }
        if (worst_growth > 1e6) {
            out.diagnostics["instability"] =
                "partial-sum growth ratio " + std::to_string(worst_growth);
        }
        out.diagnostics["fit_order"] = std::to_string(req.fit_order);
    } else {
        for (double t : req.points) {
            try {
                PVResult r = pv_fht(req.input, t, req.tol);
                out.values.push_back({t, r.value});
                out.est_error = std::max(out.est_error, r.est_error);
            } catch (const ConvergenceError& e) {
                throw ConvergenceError("apply_T at " + point_tag(t) + ": " + e.what(),
                                       e.best_value, e.est_error);
            }
        }
    }
    return out;
}

OperatorResult apply_T_check(const OperatorRequest& req) {
    check_points(req.points);
    OperatorResult out;
    Method m = resolve(req);
    out.method_used = m;
    if (m == Method::Spectral) {
        if (req.input.tag != SingularityTag::Smooth) {
            throw DomainError("apply_T_check: spectral method requires a smooth input");
        }
        ChebSeries s = fit(req.input, req.fit_order);
        for (double t : req.points) {
            double acc = 0.0;
            for (size_t n = 1; n < s.coeffs.size(); ++n) {
                acc += s.coeffs[n] * eval_u(static_cast<int>(n) - 1, t);
            }
            out.values.push_back({t, -weight(t) * acc});
        }
        out.diagnostics["fit_order"] = std::to_string(req.fit_order);
    } else {
        FunctionHandle fw = over_weight(req.input);
        for (double t : req.points) {
            try {
                PVResult r = pv_fht(fw, t, req.tol);
                out.values.push_back({t, -weight(t) * r.value});
                out.est_error = std::max(out.est_error, r.est_error);
            } catch (const ConvergenceError& e) {
                throw ConvergenceError("apply_T_check at " + point_tag(t) + ": " + e.what(),
                                       e.best_value, e.est_error);
            }
        }
    }
    return out;
}

OperatorResult apply_T_hat(const OperatorRequest& req) {
    check_points(req.points);
    for (double t : req.points) {
        if (1.0 - std::abs(t) < 1e-6) {
            throw DomainError("apply_T_hat: point too close to an endpoint (division by w)");
        }
    }
    OperatorResult out;
    Method m = resolve(req);
    out.method_used = m;
    if (m == Method::Spectral) {
        if (req.input.tag != SingularityTag::Smooth) {
            throw DomainError("apply_T_hat: spectral method requires a smooth input");
        }
        std::vector<double> c = fit_second_kind(req.input, req.fit_order);
        for (double t : req.points) {
            // T(w U_n) = -T_{n+1}: evaluate sum c_n T_{n+1}(t) via Clenshaw.
            ChebSeries shifted;
            shifted.coeffs.assign(c.size() + 1, 0.0);
            for (size_t n = 0; n < c.size(); ++n) shifted.coeffs[n + 1] = c[n];
            out.values.push_back({t, shifted.eval(t) / weight(t)});
        }
        out.diagnostics["fit_order"] = std::to_string(req.fit_order);
    } else {
        FunctionHandle wf = times_weight(req.input);
        for (double t : req.points) {
            try {
                PVResult r = pv_fht(wf, t, req.tol);
                out.values.push_back({t, -r.value / weight(t)});
                out.est_error = std::max(out.est_error, r.est_error);
            } catch (const ConvergenceError& e) {
                throw ConvergenceError("apply_T_hat at " + point_tag(t) + ": " + e.what(),
                                       e.best_value, e.est_error);
            }
        }
    }
    return out;
}

double apply_Q(const FunctionHandle& f, double tol) {
    return phi_inv_w(f, tol) / kPi;
}

double phi_inv_w(const FunctionHandle& g, double tol) {
    return integral(over_weight(g), tol).value;
}

bool in_kernel_phi(const FunctionHandle& g, double tol) {
    return std::abs(phi_inv_w(g, tol / 10)) <= tol;
}

double fht_indicator(double a, double b, double t) {
    return (std::log(std::abs(b - t)) - std::log(std::abs(a - t))) / kPi;
}

}  // namespace fht
