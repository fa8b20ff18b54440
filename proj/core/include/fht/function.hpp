#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace fht {

// The weight w(x) = sqrt(1 - x^2). Its reciprocal spans the kernel of the
// transform on L log L.
inline double weight(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

enum class SingularityTag {
    Smooth,         // evaluable and smooth on all of (-1,1)
    Jump,           // piecewise smooth with interior breakpoints
    InverseWeight,  // contains the factor 1/w; integrated via x = cos(theta)
};

// An evaluable real-valued function on (-1,1) with singularity metadata.
// This is the universal input type of the engines.
struct FunctionHandle {
    std::function<double(double)> eval;
    SingularityTag tag = SingularityTag::Smooth;
    std::vector<double> breakpoints;  // interior jump locations, sorted
    std::string name;

    double operator()(double x) const { return eval(x); }
};

// --- common constructors -------------------------------------------------

// Characteristic function of (a,b), a subinterval of (-1,1).
FunctionHandle chi(double a, double b);

// The constant-one function chi_(-1,1).
FunctionHandle chi_full();

// f(x) = 1/w(x), tagged inverse_weight.
FunctionHandle inverse_weight();

// Wrap a smooth callable.
FunctionHandle smooth(std::function<double(double)> f, std::string name = {});

// Divide a handle by w, producing an inverse_weight-tagged handle.
FunctionHandle over_weight(const FunctionHandle& f);

// Pointwise product with w (tag becomes Smooth or Jump depending on f).
FunctionHandle times_weight(const FunctionHandle& f);

}  // namespace fht
