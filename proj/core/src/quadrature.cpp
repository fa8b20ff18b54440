#include "fht/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>

#include "fht/errors.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss 7 / Kronrod 15 abscissae and weights on [-1,1].
// Columns: node, Gauss weight, Kronrod weight. First row is the center.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a, b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// Returns false if a non-finite sample was seen.
bool gk15(const std::function<double(double)>& g, double a, double b, double& value,
          double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double y0 = g(c);
    double g7 = kNodes[0][1] * y0;
    double k15 = kNodes[0][2] * y0;
    bool finite = std::isfinite(y0);
    for (int i = 1; i < 8; ++i) {
        double dx = h * kNodes[i][0];
        double yl = g(c - dx);
        double yr = g(c + dx);
        finite = finite && std::isfinite(yl) && std::isfinite(yr);
        g7 += kNodes[i][1] * (yl + yr);
        k15 += kNodes[i][2] * (yl + yr);
    }
    value = k15 * h;
    err = std::abs((k15 - g7) * h);
    return finite;
}

}  // namespace

int max_panels() {
    if (const char* s = std::getenv("FHT_MAX_PANELS")) {
        int v = std::atoi(s);
        if (v >= 4) return v;
    }
    return 1 << 16;
}

PVResult adaptive_integrate(const std::function<double(double)>& g, double a, double b,
                            double tol, const std::vector<double>& splits) {
    const int budget = max_panels();
    std::priority_queue<Panel> queue;
    double sum_val = 0.0;
    double sum_err = 0.0;
    int n_panels = 0;

    // Evaluates a panel, adds it to the running totals, and queues it unless
    // it is too narrow to split further (its error then stays on the books).
    auto push = [&](double lo, double hi) {
        Panel p{lo, hi, 0.0, 0.0};
        if (!gk15(g, lo, hi, p.value, p.err)) {
            p.value = std::numeric_limits<double>::infinity();
            p.err = std::numeric_limits<double>::infinity();
        }
        ++n_panels;
        sum_val += p.value;
        sum_err += p.err;
        const double width_limit = 4.0 * std::numeric_limits<double>::epsilon() *
                                   std::max(std::abs(lo), std::abs(hi));
        if (hi - lo >= width_limit && hi - lo >= 1e-290) {
            queue.push(p);
        }
    };

    std::vector<double> edges;
    edges.push_back(a);
    for (double s : splits) {
        if (s > a && s < b) edges.push_back(s);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] > edges[i]) push(edges[i], edges[i + 1]);
    }

    while (sum_err > tol && !queue.empty()) {
        if (std::isinf(sum_val) || std::abs(sum_val) > 1e100) {
            return {std::copysign(std::numeric_limits<double>::infinity(), sum_val),
                    std::numeric_limits<double>::infinity(), n_panels};
        }
        if (n_panels >= budget) {
            throw ConvergenceError("adaptive_integrate: panel budget exhausted", sum_val,
                                   sum_err);
        }
        Panel worst = queue.top();
        queue.pop();
        sum_val -= worst.value;
        sum_err -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }
    if (std::isinf(sum_val)) {
        return {sum_val, std::numeric_limits<double>::infinity(), n_panels};
    }
    if (sum_err > tol) {
        throw ConvergenceError("adaptive_integrate: tolerance unreachable", sum_val, sum_err);
    }
    return {sum_val, sum_err, std::max(n_panels, 1)};
}

namespace {

// Clamp to the open interval so w(x) > 0 after cos(theta) roundoff.
double clamp_open(double x) {
    const double lim = std::nextafter(1.0, 0.0);
    return std::clamp(x, -lim, lim);
}

void check_pv_preconditions(const FunctionHandle& f, double t, double tol) {
    if (!(std::abs(t) < 1.0)) throw DomainError("pv_fht: |t| must be < 1");
    if (!(tol >= 1e-13)) throw DomainError("pv_fht: tol must be >= 1e-13");
    for (double b : f.breakpoints) {
        if (std::abs(t - b) < 1e-12) {
            throw SingularPointError("pv_fht: evaluation point at a jump of the input", b);
        }
    }
}

}  // namespace

PVResult pv_fht(const FunctionHandle& f, double t, double tol) {
    check_pv_preconditions(f, t, tol);

    if (f.tag == SingularityTag::InverseWeight) {
        // x = cos(theta): p.v. int f(x)/(x-t) dx = int_0^pi h(cos th)/(cos th - t) dth
        // with h = w f. The pole add-back vanishes, so only the subtracted
        // integrand remains.
        auto h = [&f](double x) {
            double xc = clamp_open(x);
            return f(xc) * weight(xc);
        };
        const double ht = h(t);
        const double theta_t = std::acos(t);
        auto raw = [&h, ht, theta_t](double theta) {
            // cos(theta) - t = -2 sin((theta+theta_t)/2) sin((theta-theta_t)/2)
            double denom = -2.0 * std::sin(0.5 * (theta + theta_t)) *
                           std::sin(0.5 * (theta - theta_t));
            double x = std::cos(theta);
            return (h(x) - ht) / denom;
        };
        // The subtracted quotient is smooth across theta_t in exact
        // arithmetic, but sampling it there divides rounding noise of h by a
        // vanishing denominator (a node landing exactly on theta_t even
        // divides by zero). Bridge a small window with the linear
        // interpolant of the edge values instead.
        std::vector<double> splits{theta_t};
        double guard = 1e-6;
        for (double b : f.breakpoints) {
            double tb = std::acos(std::clamp(b, -1.0, 1.0));
            splits.push_back(tb);
            guard = std::min(guard, 0.45 * std::abs(tb - theta_t));
        }
        guard = std::min({guard, 0.5 * theta_t, 0.5 * (kPi - theta_t)});
        const double il = raw(theta_t - guard);
        const double ir = raw(theta_t + guard);
        auto integrand = [raw, theta_t, guard, il, ir](double theta) {
            double d = theta - theta_t;
            if (std::abs(d) <= guard) {
                return 0.5 * ((ir + il) + (ir - il) * (d / guard));
            }
            return raw(theta);
        };
        PVResult r = adaptive_integrate(integrand, 0.0, kPi, tol, splits);
        r.value /= kPi;
        r.est_error /= kPi;
        return r;
    }

    const double ft = f(t);
    auto integrand = [&, ft](double x) { return (f(x) - ft) / (x - t); };
    std::vector<double> splits{t};
    splits.insert(splits.end(), f.breakpoints.begin(), f.breakpoints.end());
    PVResult r = adaptive_integrate(integrand, -1.0, 1.0, tol, splits);
    r.value = (r.value + ft * (std::log1p(-t) - std::log1p(t))) / kPi;
    r.est_error /= kPi;
    return r;
}

PVResult pv_fht_excision(const FunctionHandle& f, double t, double tol, double eps) {
    check_pv_preconditions(f, t, tol);
    auto integrand = [&](double x) { return f(x) / (x - t); };
    std::vector<double> splits(f.breakpoints);
    PVResult left = adaptive_integrate(integrand, -1.0, t - eps, tol / 2, splits);
    PVResult right = adaptive_integrate(integrand, t + eps, 1.0, tol / 2, splits);
    return {(left.value + right.value) / kPi, (left.est_error + right.est_error) / kPi,
            left.subdivisions + right.subdivisions};
}

PVResult integral(const FunctionHandle& f, double tol) {
    if (!(tol >= 1e-13)) throw DomainError("integral: tol must be >= 1e-13");
    if (f.tag == SingularityTag::InverseWeight) {
        auto integrand = [&f](double theta) {
            double x = clamp_open(std::cos(theta));
            return f(x) * weight(x);
        };
        std::vector<double> splits;
        for (double b : f.breakpoints) splits.push_back(std::acos(std::clamp(b, -1.0, 1.0)));
        return adaptive_integrate(integrand, 0.0, kPi, tol, splits);
    }
    return adaptive_integrate([&f](double x) { return f(x); }, -1.0, 1.0, tol,
                              f.breakpoints);
}

}  // namespace fht
