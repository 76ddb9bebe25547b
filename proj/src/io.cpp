#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "fracsphere/io.hpp"

namespace fracsphere {

std::string format_shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_17(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

FieldDescriptor FieldDescriptor::from_json(const nlohmann::json& j)
{
    FieldDescriptor d;
    if (!j.is_object())
        throw ParameterError("field descriptor must be a JSON object");
    if (j.contains("coeffs")) {
        d.family = Family::coeffs;
        for (const auto& e : j.at("coeffs")) {
            if (!e.is_array() || e.size() != 2)
                throw ParameterError("field descriptor coeffs must be [k, c_k] pairs");
            const int k = e[0].get<int>();
            if (k < 0)
                throw ParameterError("field descriptor degree must be non-negative");
            d.coeffs.emplace_back(k, e[1].get<double>());
        }
        return d;
    }
    const std::string family = j.value("family", "");
    if (family == "one_plus_eps_y1") {
        d.family = Family::one_plus_eps_y1;
        d.eps = j.at("eps").get<double>();
        return d;
    }
    if (family == "pullback_fstar") {
        d.family = Family::pullback_fstar;
        return d;
    }
    throw ParameterError("unknown field descriptor: " + j.dump());
}

FieldDescriptor FieldDescriptor::parse(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError(std::string("field descriptor is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

nlohmann::json FieldDescriptor::to_json() const
{
    switch (family) {
    case Family::coeffs: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : coeffs)
            arr.push_back({k, c});
        return {{"coeffs", arr}};
    }
    case Family::one_plus_eps_y1:
        return {{"family", "one_plus_eps_y1"}, {"eps", eps}};
    case Family::pullback_fstar:
        return {{"family", "pullback_fstar"}};
    }
    return {};
}

std::string FieldDescriptor::to_string() const
{
    return to_json().dump();
}

ZonalField FieldDescriptor::to_zonal(int n) const
{
    switch (family) {
    case Family::coeffs: {
        int K = 0;
        for (const auto& kc : coeffs)
            K = std::max(K, kc.first);
        VectorXd c = VectorXd::Zero(K + 1);
        for (const auto& [k, v] : coeffs)
            c(k) += v;
        return {n, c};
    }
    case Family::one_plus_eps_y1:
        return ZonalField::one_plus_eps_y1(n, eps);
    case Family::pullback_fstar:
        return ZonalField::constant(n, 1.0);
    }
    throw ParameterError("unknown field descriptor family");
}

FieldDescriptor FieldDescriptor::from_zonal(const ZonalField& f)
{
    FieldDescriptor d;
    for (Index k = 0; k < f.coeffs.size(); ++k)
        if (f.coeffs(k) != 0)
            d.coeffs.emplace_back(int(k), f.coeffs(k));
    return d;
}

void write_constants_header(std::ostream& os)
{
    os << "n,s,q,q_star,p,lambda,kappa,C\n";
}

void write_constants_row(std::ostream& os, const ParameterSet& ps)
{
    os << ps.n << ',' << format_17(ps.s) << ',' << format_17(ps.q) << ',' << format_17(ps.q_star) << ','
       << format_17(ps.p) << ',' << format_17(ps.lambda) << ',' << format_17(ps.kappa) << ','
       << format_17(ps.sharp_constant) << '\n';
}

void write_reports_csv(std::ostream& os, const std::vector<InequalityReport>& reports)
{
    os << "kind,n,s,q,lhs,rhs,deficit,relative_deficit,field_descriptor\n";
    for (const auto& r : reports)
        os << to_string(r.kind) << ',' << r.params.n << ',' << format_shortest(r.params.s) << ','
           << format_shortest(r.q_used) << ',' << format_shortest(r.lhs) << ',' << format_shortest(r.rhs) << ','
           << format_shortest(r.deficit) << ',' << format_shortest(r.relative_deficit) << ','
           << csv_cell(r.field_descriptor) << '\n';
}

nlohmann::json report_to_json(const InequalityReport& r)
{
    return {{"kind", to_string(r.kind)},
            {"n", r.params.n},
            {"s", r.params.s},
            {"q", r.q_used},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"deficit", r.deficit},
            {"relative_deficit", r.relative_deficit},
            {"field_descriptor", r.field_descriptor},
            {"equality_case", r.equality_case}};
}

nlohmann::json reports_to_json(const std::vector<InequalityReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(report_to_json(r));
    return arr;
}

void write_flow_csv(std::ostream& os, const FlowSeries& series)
{
    os << "t,entropy,mass,bound\n";
    for (const auto& s : series.samples)
        os << format_shortest(s.t) << ',' << format_shortest(s.entropy) << ',' << format_shortest(s.mass) << ','
           << format_shortest(s.bound) << '\n';
}

void write_grid_csv(std::ostream& os, const GridField& f)
{
    os << "x,value\n";
    for (Index j = 0; j < f.size(); ++j)
        os << format_shortest(f.x(j)) << ',' << format_shortest(f.values(j)) << '\n';
}

GridField read_grid_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "x,value")
        throw ParameterError("grid CSV must start with the header x,value");
    std::vector<double> xs, vs;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParameterError("grid CSV row without a comma: " + line);
        double x = 0, v = 0;
        const char* b = line.data();
        const auto r1 = std::from_chars(b, b + comma, x);
        const auto r2 = std::from_chars(b + comma + 1, b + line.size(), v);
        if (r1.ec != std::errc() || r2.ec != std::errc())
            throw ParameterError("grid CSV row is not numeric: " + line);
        xs.push_back(x);
        vs.push_back(v);
    }
    if (xs.size() < 2)
        throw ParameterError("grid CSV needs at least two rows");
    GridSpec g;
    g.N = Index(xs.size());
    g.L = -xs.front();
    const double dx = 2 * g.L / double(g.N);
    for (std::size_t j = 0; j < xs.size(); ++j)
        if (std::abs(xs[j] - g.x(Index(j))) > 1e-9 * std::max(1.0, g.L))
            throw ParameterError("grid CSV abscissae are not x_j = -L + 2Lj/N (dx = " + format_shortest(dx) + ")");
    return {g, Eigen::Map<const VectorXd>(vs.data(), Index(vs.size()))};
}

} // namespace fracsphere
