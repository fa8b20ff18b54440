#pragma once

#include <string>
#include <vector>

#include "fht/chebyshev.hpp"
#include "fht/function.hpp"

namespace fht {

// Diagnostics for "g lies in the range of T on L^inf": the kernel condition
// int g/w = 0 plus a boundedness probe of T-check(g) on grids approaching
// the endpoints. Boundedness of T-check(g) is undecidable from finitely many
// samples; the refinement-growth classifier below is declared policy.
struct RangeMembershipReport {
    double phi_value = 0.0;
    bool phi_pass = false;
    // (endpoint distance, sup |T-check(g)| over the grid at that distance)
    std::vector<std::pair<double, double>> tcheck_sup_by_refinement;
    std::string boundedness_verdict;  // "bounded" | "growing" | "inconclusive"
    bool overall = false;
    std::vector<std::string> annotations;  // quadrature failures, etc.
};

RangeMembershipReport check_range(const FunctionHandle& g, double tol);

struct AirfoilSolution {
    ChebSeries solution;       // f = T-check(g), fitted on interior nodes
    double residual_sup = 0.;  // max over the check grid of |T(f) - g|
    double defect = 0.0;       // Q(g): the rank-one defect for non-range g
    RangeMembershipReport membership;
};

// Solve T(f) = g by the inversion formula f = T-check(g) = -w T(g/w).
// Rejects non-range inputs unless force is set; forced solutions satisfy
// T(f) = g - Q(g) chi instead.
AirfoilSolution solve(const FunctionHandle& g, double tol, bool force = false,
                      int fit_order = 48);

// A priori bound sup |T-check(g)| <= (2/pi) K B(1/2, lambda) for g with
// Hoelder constant K and exponent lambda in (0,1].
double holder_bound(double K, double lambda);

}  // namespace fht
