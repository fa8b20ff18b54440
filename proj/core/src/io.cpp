#include "fht/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "fht/errors.hpp"

namespace fht {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

FunctionHandle load_csv_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open CSV file: " + path);

    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty CSV file", 1, 1);
    ++lineno;
    {
        std::string h = strip(line);
        if (h != "x,value")
            throw ParseError("CSV header must be exactly 'x,value'", lineno, 1);
    }

    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("expected 'x,value' row", lineno, 1);
        try {
            size_t used = 0;
            double x = std::stod(line.substr(0, comma), &used);
            double v = std::stod(line.substr(comma + 1));
            xs.push_back(x);
            vs.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("malformed number in CSV row", lineno, 1);
        }
        if (!(xs.back() > -1.0 && xs.back() < 1.0))
            throw ParseError("x must lie strictly inside (-1,1)", lineno, 1);
        if (xs.size() > 1 && !(xs[xs.size() - 2] < xs.back()))
            throw ParseError("x must be strictly increasing", lineno, 1);
    }
    if (xs.size() < 2)
        throw ParseError("CSV needs at least two sample rows", lineno + 1, 1);

    FunctionHandle h;
    h.eval = [xs, vs](double x) {
        if (x <= xs.front()) return vs.front();
        if (x >= xs.back()) return vs.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t i = static_cast<size_t>(it - xs.begin());
        double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return vs[i - 1] + t * (vs[i] - vs[i - 1]);
    };
    h.tag = SingularityTag::Jump;  // piecewise linear: kinks at the nodes
    h.breakpoints = xs;
    h.name = "csv:" + path;
    return h;
}

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : rep.cases) {
        nlohmann::json j{{"id", c.id},
                         {"statement", c.statement},
                         {"inputs", c.inputs},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}};
        j[c.is_margin ? "margin" : "residual"] = c.residual;
        if (!c.detail.empty()) j["detail"] = c.detail;
        cases.push_back(std::move(j));
    }
    int pass = 0, fail = 0;
    for (const auto& c : rep.cases) (c.pass ? pass : fail)++;
    return nlohmann::json{{"suite", rep.suite},
                          {"engines", rep.engines},
                          {"seed", rep.seed},
                          {"wall_time", rep.wall_time},
                          {"cases", std::move(cases)},
                          {"summary", {{"pass", pass}, {"fail", fail}}}};
}

nlohmann::json report_document(const VerificationReport& rep,
                               const std::string& command) {
    nlohmann::json doc = report_json(rep);
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    return doc;
}

std::string report_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "id,value,tolerance,pass\n";
    for (const auto& c : rep.cases)
        os << c.id << "," << c.residual << "," << c.tolerance << ","
           << (c.pass ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace fht
