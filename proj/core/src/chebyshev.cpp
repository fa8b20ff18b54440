#include "fht/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"

namespace fht {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ChebSeries::eval(double t) const {
    if (t < -1.0 || t > 1.0) {
        throw DomainError("ChebSeries::eval: point outside [-1,1]");
    }
    // Clenshaw recurrence, backwards.
    double b1 = 0.0, b2 = 0.0;
    for (size_t i = coeffs.size(); i-- > 1;) {
        double b0 = 2.0 * t * b1 - b2 + coeffs[i];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + (coeffs.empty() ? 0.0 : coeffs[0]);
}

ChebNodeGrid::ChebNodeGrid(int n) : order(n) {
    if (n < 1) throw DomainError("ChebNodeGrid: order must be >= 1");
    nodes.resize(n);
    for (int k = 0; k < n; ++k) {
        nodes[k] = std::cos((2 * k + 1) * kPi / (2.0 * n));
    }
}

ChebSeries fit(const FunctionHandle& f, int order) {
    const int n = order + 1;
    ChebNodeGrid grid(n);
    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        values[k] = f(grid.nodes[k]);
        if (!std::isfinite(values[k])) {
            throw InvalidInputError("fit: non-finite sample value", grid.nodes[k]);
        }
    }
    ChebSeries s;
    s.coeffs.assign(n, 0.0);
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += values[k] * std::cos(m * (2 * k + 1) * kPi / (2.0 * n));
        }
        s.coeffs[m] = acc * (m == 0 ? 1.0 : 2.0) / n;
    }
    return s;
}

std::vector<double> fit_second_kind(const FunctionHandle& f, int order) {
    // Second-kind Gauss nodes x_k = cos(k pi/(N+1)), k = 1..N, with
    // discrete orthogonality sum sin(theta_k) sin((m+1) theta_k).
    const int big = order + 1;
    std::vector<double> c(order + 1, 0.0);
    std::vector<double> theta(big), values(big);
    for (int k = 1; k <= big; ++k) {
        theta[k - 1] = k * kPi / (big + 1);
        double x = std::cos(theta[k - 1]);
        values[k - 1] = f(x);
        if (!std::isfinite(values[k - 1])) {
            throw InvalidInputError("fit_second_kind: non-finite sample value", x);
        }
    }
    for (int m = 0; m <= order; ++m) {
        double acc = 0.0;
        for (int k = 0; k < big; ++k) {
            acc += values[k] * std::sin(theta[k]) * std::sin((m + 1) * theta[k]);
        }
        c[m] = acc * 2.0 / (big + 1);
    }
    return c;
}

double eval_u(int n, double t) {
    if (n < 0) return 0.0;
    double u0 = 1.0, u1 = 2.0 * t;
    if (n == 0) return u0;
    if (n == 1) return u1;
    for (int k = 2; k <= n; ++k) {
        double u2 = 2.0 * t * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

double fht_cheb_rho(int n, double t) {
    if (!(std::abs(t) < 1.0)) {
        throw DomainError("fht_cheb_rho: |t| must be < 1 (logarithmic endpoint singularity)");
    }
    // rho_0 = (1/pi) log((1-t)/(1+t)); rho_1 = t rho_0 + 2/pi;
    // rho_{n+1} = 2 t rho_n - rho_{n-1} + (2/pi) c_n with c_n = int T_n.
    // The homogeneous solutions T_n, U_n are bounded on [-1,1], so forward
    // error growth is only polynomial in n.
    double r0 = std::log1p(-t) - std::log1p(t);
    r0 /= kPi;
    if (n == 0) return r0;
    double r1 = t * r0 + 2.0 / kPi;
    if (n == 1) return r1;
    for (int k = 1; k < n; ++k) {
        double ck = (k % 2 == 0) ? 2.0 / (1.0 - double(k) * k) : 0.0;
        double r2 = 2.0 * t * r1 - r0 + (2.0 / kPi) * ck;
        r0 = r1;
        r1 = r2;
    }
    return r1;
}

double fht_series(const ChebSeries& s, double t) { return fht_series(s, t, nullptr); }

double fht_series(const ChebSeries& s, double t, double* growth_ratio) {
    if (!(std::abs(t) < 1.0)) {
        throw DomainError("fht_series: |t| must be < 1");
    }
    // Run the rho recurrence once, accumulating the series in the same pass.
    double r0 = (std::log1p(-t) - std::log1p(t)) / kPi;
    double sum = s.coeffs.empty() ? 0.0 : s.coeffs[0] * r0;
    double peak = std::abs(sum);
    if (s.coeffs.size() > 1) {
        double r1 = t * r0 + 2.0 / kPi;
        sum += s.coeffs[1] * r1;
        peak = std::max(peak, std::abs(sum));
        for (size_t n = 2; n < s.coeffs.size(); ++n) {
            int k = static_cast<int>(n) - 1;
            double ck = (k % 2 == 0) ? 2.0 / (1.0 - double(k) * k) : 0.0;
            double r2 = 2.0 * t * r1 - r0 + (2.0 / kPi) * ck;
            r0 = r1;
            r1 = r2;
            sum += s.coeffs[n] * r1;
            peak = std::max(peak, std::abs(sum));
        }
    }
    if (growth_ratio) {
        *growth_ratio = peak / std::max(std::abs(sum), 1e-300);
    }
    return sum;
}

}  // namespace fht
