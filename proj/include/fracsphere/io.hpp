#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracsphere/euclid.hpp"
#include "fracsphere/flow.hpp"
#include "fracsphere/inequality.hpp"

namespace fracsphere {

/// Shortest decimal that parses back to the same double.
std::string format_shortest(double v);
/// %.17g
std::string format_17(double v);
/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_cell(const std::string& s);

struct FieldDescriptor {
    enum class Family { coeffs, one_plus_eps_y1, pullback_fstar };
    Family family = Family::coeffs;
    std::vector<std::pair<int, double>> coeffs; // (k, c_k)
    double eps = 0;

    static FieldDescriptor from_json(const nlohmann::json& j);
    static FieldDescriptor parse(const std::string& text);
    nlohmann::json to_json() const;
    std::string to_string() const; // compact JSON

    /// Sphere field; pullback_fstar is the constant 1 (the pullback of f* up to scale).
    ZonalField to_zonal(int n) const;
    static FieldDescriptor from_zonal(const ZonalField& f);
};

/// (n, s, q, q_star, p, lambda, kappa, C), 17 significant digits.
void write_constants_header(std::ostream& os);
void write_constants_row(std::ostream& os, const ParameterSet& ps);

/// (kind, n, s, q, lhs, rhs, deficit, relative_deficit, field_descriptor)
void write_reports_csv(std::ostream& os, const std::vector<InequalityReport>& reports);
nlohmann::json report_to_json(const InequalityReport& r);
nlohmann::json reports_to_json(const std::vector<InequalityReport>& reports);

/// (t, entropy, mass, bound)
void write_flow_csv(std::ostream& os, const FlowSeries& series);

/// (x, value)
void write_grid_csv(std::ostream& os, const GridField& f);
GridField read_grid_csv(std::istream& is);

} // namespace fracsphere
