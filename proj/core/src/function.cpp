#include "fht/function.hpp"

#include <utility>

namespace fht {

FunctionHandle chi(double a, double b) {
    FunctionHandle h;
    h.eval = [a, b](double x) { return (x > a && x < b) ? 1.0 : 0.0; };
    h.tag = SingularityTag::Jump;
    if (a > -1.0) h.breakpoints.push_back(a);
    if (b < 1.0) h.breakpoints.push_back(b);
    if (h.breakpoints.empty()) h.tag = SingularityTag::Smooth;
    h.name = "chi(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return h;
}

FunctionHandle chi_full() { return chi(-1.0, 1.0); }

FunctionHandle inverse_weight() {
    FunctionHandle h;
    h.eval = [](double x) { return 1.0 / weight(x); };
    h.tag = SingularityTag::InverseWeight;
    h.name = "1/w";
    return h;
}

FunctionHandle smooth(std::function<double(double)> f, std::string name) {
    FunctionHandle h;
    h.eval = std::move(f);
    h.tag = SingularityTag::Smooth;
    h.name = std::move(name);
    return h;
}

FunctionHandle over_weight(const FunctionHandle& f) {
    FunctionHandle h;
    auto base = f.eval;
    h.eval = [base](double x) { return base(x) / weight(x); };
    h.tag = SingularityTag::InverseWeight;
    h.breakpoints = f.breakpoints;
    h.name = "(" + f.name + ")/w";
    return h;
}

FunctionHandle times_weight(const FunctionHandle& f) {
    FunctionHandle h;
    auto base = f.eval;
    h.eval = [base](double x) { return base(x) * weight(x); };
    h.tag = f.tag == SingularityTag::InverseWeight ? SingularityTag::Smooth : f.tag;
    h.breakpoints = f.breakpoints;
    h.name = "w*(" + f.name + ")";
    return h;
}

}  // namespace fht
