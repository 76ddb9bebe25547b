#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fracsphere/io.hpp"

using namespace fracsphere;

TEST_SUITE("io")
{
    TEST_CASE("number formatting")
    {
        CHECK(format_shortest(0.1) == "0.1");
        CHECK(format_shortest(1.0 / 3) == "0.3333333333333333");
        for (double v : {1.0 / 3, 2.718281828459045, 1e-300, 6.02214076e23}) {
            CHECK(std::stod(format_shortest(v)) == v);
            CHECK(std::stod(format_17(v)) == v);
        }
        CHECK(format_17(1.0 / 3) == "0.33333333333333331");
        CHECK(format_17(INFINITY) == "inf");
    }

    TEST_CASE("csv cells")
    {
        CHECK(csv_cell("abc") == "abc");
        CHECK(csv_cell("a,b") == "\"a,b\"");
        CHECK(csv_cell("say \"x\", y") == "\"say \"\"x\"\", y\"");
    }

    TEST_CASE("field descriptors")
    {
        const auto d = FieldDescriptor::parse(R"({"coeffs": [[0, 1.0], [3, -0.25]]})");
        const auto f = d.to_zonal(2);
        CHECK(f.coeffs.size() == 4);
        CHECK(f.coeffs(3) == -0.25);
        CHECK(FieldDescriptor::parse(d.to_string()).to_zonal(2).coeffs == f.coeffs);
        const auto e = FieldDescriptor::parse(R"({"family": "one_plus_eps_y1", "eps": 0.1})").to_zonal(3);
        CHECK(e.coeffs(1) == 0.1);
        const auto p = FieldDescriptor::parse(R"({"family": "pullback_fstar"})").to_zonal(1);
        CHECK(is_constant(p));
        CHECK_THROWS_AS(FieldDescriptor::parse("{bad"), ParameterError);
        CHECK_THROWS_AS(FieldDescriptor::parse(R"({"family": "other"})"), ParameterError);
        CHECK(FieldDescriptor::from_zonal(f).to_string() == d.to_string());
    }

    TEST_CASE("constants row")
    {
        std::ostringstream os;
        write_constants_header(os);
        write_constants_row(os, derive_params(3, 2, 4));
        CHECK(os.str() == "n,s,q,q_star,p,lambda,kappa,C\n3,2,4,6,1.2,1,1.3333333333333333,0.33333333333333331\n");
    }

    TEST_CASE("report serialization")
    {
        auto r = deficit(InequalityKind::interpolation, ZonalField::one_plus_eps_y1(3, 0.1), derive_params(3, 2, 4),
                         R"({"family":"one_plus_eps_y1","eps":0.1})");
        std::ostringstream os;
        write_reports_csv(os, {r});
        const std::string s = os.str();
        CHECK(s.rfind("kind,n,s,q,lhs,rhs,deficit,relative_deficit,field_descriptor\n", 0) == 0);
        CHECK(s.find("interpolation,3,2,4,") != std::string::npos);
        const auto j = reports_to_json({r});
        CHECK(j.size() == 1);
        CHECK(j[0]["deficit"].get<double>() == r.deficit);
        CHECK(j[0]["kind"] == "interpolation");
    }

    TEST_CASE("grid csv round trip")
    {
        const GridSpec g{3.5, 64};
        const GridField f = sample(g, [](double x) { return std::exp(-x * x) / 3; });
        std::stringstream ss;
        write_grid_csv(ss, f);
        const GridField h = read_grid_csv(ss);
        CHECK(h.grid.N == g.N);
        CHECK(h.grid.L == g.L);
        CHECK(h.values == f.values);
        std::stringstream bad("x,value\n0,1\n");
        CHECK_THROWS_AS(read_grid_csv(bad), ParameterError);
    }
}
