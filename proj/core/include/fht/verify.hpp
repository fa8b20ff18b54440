#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fht/function.hpp"

namespace fht {

struct VerificationCase {
    std::string id;
    std::string statement;  // the identity or inequality being checked
    std::string inputs;
    double residual = 0.0;  // residual for identities, margin for inequalities
    double tolerance = 0.0;
    bool is_margin = false;  // pass iff residual > 0 instead of residual <= tol
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    std::vector<std::string> engines;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

// |int f T(g) + int g T(f)| = 0 for bounded f and g in the L log L class.
// Cases: three fixed pairs with closed-form transforms, then seeded random
// pairs of Chebyshev polynomials and interval-union indicators.
VerificationReport verify_parseval(std::uint64_t seed, int n_cases);

// Left inverse T-check T = id on L^inf and right defect T T-check = id - Q.
// Random polynomials (spectral transforms) and indicator sums (closed-form
// transforms), residuals in sup norm over interior grids.
VerificationReport verify_inversion(std::uint64_t seed, int n_cases);

// ||T(chi_A)||_{L_exp} > 1/(pi e^2) for every A with mu(A) > 0. Random
// unions of <= 5 intervals with mu(A) in [1e-3, 2] by rejection; margins
// reported. Norms use the closed-form transform of chi_A with offset cells,
// so arbitrarily thin intervals are handled exactly.
VerificationReport verify_lower_bound(std::uint64_t seed, int n_sets);

// Level-set probe: A_n = {n <= |f| < n+1}; each n ||T(chi_{A_n})|| is a
// lower bound for sup_A ||T(f chi_A)||. Divergence past the cap certifies
// that f lies outside the optimal domain of T into L_exp. Bounded inputs
// make the probe decline with a warning case.
VerificationReport probe_optimal_domain(const FunctionHandle& f, int n_max,
                                        double cap = 5.0);

}  // namespace fht
