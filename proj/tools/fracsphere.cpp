#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracsphere/euclid.hpp"
#include "fracsphere/flow.hpp"
#include "fracsphere/inequality.hpp"
#include "fracsphere/io.hpp"

using namespace fracsphere;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_assertion = 1;
constexpr int exit_usage = 2;

enum class ValueType { integer, real, text };

const std::map<std::string, ValueType> option_types = {
    {"n", ValueType::integer},      {"s", ValueType::real},       {"q", ValueType::real},
    {"out", ValueType::text},       {"seed", ValueType::integer}, {"K", ValueType::integer},
    {"kind", ValueType::text},      {"count", ValueType::integer}, {"field", ValueType::text},
    {"kmax", ValueType::integer},   {"dt", ValueType::real},      {"tmax", ValueType::real},
    {"eps", ValueType::real},       {"summary", ValueType::text}, {"sample_every", ValueType::real},
    {"L", ValueType::real},         {"N", ValueType::integer},    {"family", ValueType::text},
    {"mode", ValueType::text},
};

struct Bound {
    CLI::Option* option;
    std::string key;
    std::shared_ptr<std::string> value;
};

class Options {
public:
    void add(CLI::App* app, const std::string& key, const std::string& flag, const std::string& help)
    {
        auto v = std::make_shared<std::string>();
        bound_.push_back({app->add_option(flag, *v, help), key, v});
    }

    // Command-line values override the config document.
    void merge_into(json& cfg) const
    {
        for (const auto& b : bound_) {
            if (b.option->count() == 0)
                continue;
            switch (option_types.at(b.key)) {
            case ValueType::integer: cfg[b.key] = std::stoll(*b.value); break;
            case ValueType::real: cfg[b.key] = std::stod(*b.value); break;
            case ValueType::text: cfg[b.key] = *b.value; break;
            }
        }
    }

private:
    std::vector<Bound> bound_;
};

json load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open config file " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParameterError("config is not valid JSON: " + std::string(e.what()));
    }
}

template <typename T>
T get(const json& cfg, const std::string& key, T fallback)
{
    return cfg.contains(key) ? cfg.at(key).get<T>() : fallback;
}

bool has(const json& cfg, const std::string& key)
{
    return cfg.contains(key) && !cfg.at(key).is_null();
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const json& cfg)
    {
        if (has(cfg, "out")) {
            path_ = cfg.at("out").get<std::string>();
            file_.open(path_);
            if (!file_)
                throw ParameterError("cannot open output file " + path_);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool json_output() const { return path_.size() >= 5 && path_.substr(path_.size() - 5) == ".json"; }

private:
    std::string path_;
    std::ofstream file_;
};

ParameterSet params_from(const json& cfg, double s_default, double q_default)
{
    const int n = get(cfg, "n", 1);
    const double s = get(cfg, "s", s_default);
    if (has(cfg, "q") || !std::isnan(q_default))
        return derive_params(n, s, get(cfg, "q", q_default));
    return derive_params(n, s);
}

std::string optional_cell(const std::function<double()>& f)
{
    try {
        return format_17(f());
    } catch (const std::exception&) {
        return "";
    }
}

int cmd_constants(const json& cfg)
{
    if (!has(cfg, "s"))
        throw ParameterError("constants: --s is required");
    const ParameterSet ps = params_from(cfg, 0, std::nan(""));
    const int K = get(cfg, "K", 16);
    Sink sink(cfg);
    auto& os = sink.stream();
    write_constants_header(os);
    write_constants_row(os, ps);
    os << '\n' << "k,gamma_k,delta_k,eps_k\n";
    const OperatorKind primary = primary_operator(ps);
    for (int k = 0; k <= K; ++k) {
        os << k << ',' << optional_cell([&] { return operator_eigenvalue(OperatorKind::K_s, ps, k); }) << ','
           << optional_cell([&] { return operator_eigenvalue(primary, ps, k); }) << ','
           << optional_cell([&] { return operator_eigenvalue(OperatorKind::R_qs, ps, k); }) << '\n';
    }
    return exit_ok;
}

void emit_reports(const json& cfg, const std::vector<InequalityReport>& reports)
{
    Sink sink(cfg);
    if (sink.json_output())
        sink.stream() << reports_to_json(reports).dump(2) << '\n';
    else
        write_reports_csv(sink.stream(), reports);
}

int cmd_verify(const json& cfg)
{
    const std::string kind_name = get<std::string>(cfg, "kind", "all");
    const double tol = deficit_tolerance();
    std::vector<InequalityReport> reports;
    bool ok = true;

    if (kind_name == "thm16") {
        const double s = get(cfg, "s", 0.5), q = get(cfg, "q", 3.0);
        const auto ep = euclid_params(get(cfg, "n", 1), s, q);
        GridSpec grid = default_thm16_grid();
        grid.L = get(cfg, "L", grid.L);
        grid.N = get<Index>(cfg, "N", grid.N);
        for (const auto& name : euclid_family_names()) {
            auto r = thm16_deficit(euclid_family(name, s, grid), ep, name);
            r.equality_case = name == "fstar";
            ok = ok && r.deficit >= -euclid_tolerance && (!r.equality_case || std::abs(r.deficit) <= euclid_tolerance);
            reports.push_back(r);
        }
    } else if (has(cfg, "field")) {
        const auto kind = inequality_kind_from_string(kind_name == "all" ? "interpolation" : kind_name);
        const ParameterSet ps = params_from(cfg, 0.5, std::nan(""));
        const auto desc = cfg.at("field").is_string() ? FieldDescriptor::parse(cfg.at("field").get<std::string>())
                                                      : FieldDescriptor::from_json(cfg.at("field"));
        auto r = deficit(kind, desc.to_zonal(ps.n), ps, desc.to_string());
        ok = r.holds(tol) && (!r.equality_case || std::abs(r.deficit) <= tol * std::max(1.0, std::abs(r.rhs)));
        reports.push_back(r);
    } else {
        if (has(cfg, "n") || has(cfg, "s") || has(cfg, "q"))
            throw ParameterError("verify: the random suite draws its own (n, s, q); pass --field to fix them");
        const auto seed = get<std::uint64_t>(cfg, "seed", 7);
        const int count = get(cfg, "count", 200);
        const bool all = kind_name == "all";
        const InequalityKind want = all ? InequalityKind::interpolation : inequality_kind_from_string(kind_name);
        for (const auto& c : random_suite(all ? count : count * int(sphere_inequality_kinds().size()), seed)) {
            if (!all && c.kind != want)
                continue;
            auto r = evaluate(c);
            const bool eq_ok = !c.expected_equality || std::abs(r.deficit) <= tol * std::max(1.0, std::abs(r.rhs));
            ok = ok && r.holds(tol) && eq_ok;
            reports.push_back(r);
            if (!all && int(reports.size()) == count)
                break;
        }
    }
    emit_reports(cfg, reports);
    if (!ok)
        std::cerr << "verify: a deficit fell below the tolerance\n";
    return ok ? exit_ok : exit_assertion;
}

int cmd_scan(const json& cfg)
{
    const std::string mode = get<std::string>(cfg, "mode", "lemma22");
    Sink sink(cfg);
    auto& os = sink.stream();
    if (mode == "lemma22") {
        const int kmax = get(cfg, "kmax", 50);
        std::vector<int> dims;
        if (has(cfg, "n"))
            dims.push_back(cfg.at("n").get<int>());
        else
            dims = {1, 2, 3, 4, 5};
        bool ok = true;
        os << "n,k_max,comparisons,violations,min_gap,min_gap_k,min_gap_q\n";
        std::vector<ScanViolation> all;
        for (int n : dims) {
            const auto rep = monotonicity_scan(n, kmax, default_scan_grid());
            os << n << ',' << kmax << ',' << rep.comparisons << ',' << rep.violations.size() << ','
               << format_shortest(rep.min_gap) << ',' << rep.min_gap_k << ',' << format_shortest(rep.min_gap_q)
               << '\n';
            ok = ok && rep.ok();
            all.insert(all.end(), rep.violations.begin(), rep.violations.end());
        }
        for (const auto& v : all)
            std::cerr << "violation: n=" << v.n << " k=" << v.k << " q=" << v.q_lo << ".." << v.q_hi
                      << " gap=" << v.gap << '\n';
        return ok ? exit_ok : exit_assertion;
    }
    if (mode == "s_grid") {
        const int n = get(cfg, "n", 3);
        os << "n,s,q,q_star,C\n";
        for (int i = -19; i <= 20; ++i) {
            if (i == 0)
                continue;
            const double s = n * i / 20.0;
            for (int j = 0; j <= 36; ++j) {
                const double q = 1 + j * 0.25;
                ParameterSet ps;
                try {
                    ps = derive_params(n, s, q);
                } catch (const ParameterError&) {
                    continue;
                }
                os << n << ',' << format_shortest(s) << ',' << format_shortest(q) << ','
                   << format_shortest(ps.q_star) << ',' << format_shortest(ps.sharp_constant) << '\n';
            }
        }
        return exit_ok;
    }
    throw ParameterError("scan: mode must be lemma22 or s_grid");
}

int cmd_flow(const json& cfg)
{
    FlowConfig fc;
    fc.params = derive_params(1, get(cfg, "s", 0.5), get(cfg, "q", 4.0));
    fc.K = get(cfg, "K", fc.K);
    fc.dt = get(cfg, "dt", fc.dt);
    fc.t_max = get(cfg, "tmax", fc.t_max);
    fc.sample_every = get(cfg, "sample_every", fc.sample_every);
    if (has(cfg, "field")) {
        const auto desc = cfg.at("field").is_string() ? FieldDescriptor::parse(cfg.at("field").get<std::string>())
                                                      : FieldDescriptor::from_json(cfg.at("field"));
        fc.init_root = desc.to_zonal(1);
    } else {
        fc.init_root = ZonalField::one_plus_eps_y1(1, get(cfg, "eps", 0.01));
    }
    const FlowSeries series = run(fc);
    {
        Sink sink(cfg);
        write_flow_csv(sink.stream(), series);
    }
    json summary;
    const double theory = 2 / fc.params.sharp_constant;
    try {
        const double rate = fit_rate(series);
        summary = {{"fitted_rate", rate}, {"theoretical_rate", theory}, {"ratio", rate / theory}};
    } catch (const InsufficientData& e) {
        summary = {{"fitted_rate", nullptr}, {"theoretical_rate", theory}, {"ratio", nullptr}, {"note", e.what()}};
    }
    summary["bound_holds"] = series.bound_ok;
    summary["max_mass_drift"] = series.max_mass_drift;
    summary["clamp_events"] = series.clamp_events;
    if (has(cfg, "summary")) {
        std::ofstream out(cfg.at("summary").get<std::string>());
        out << summary.dump(2) << '\n';
    } else {
        std::cerr << summary.dump(2) << '\n';
    }
    const bool ok = series.bound_ok && series.max_mass_drift <= 1e-8;
    return ok ? exit_ok : exit_assertion;
}

int cmd_euclid(const json& cfg)
{
    const std::string mode = get<std::string>(cfg, "mode", "eigen");
    if (mode == "eigen") {
        GridSpec grid = default_eigen_grid();
        grid.L = get(cfg, "L", grid.L);
        grid.N = get<Index>(cfg, "N", grid.N);
        std::vector<double> orders;
        if (has(cfg, "s"))
            orders.push_back(cfg.at("s").get<double>());
        else
            orders = {0.3, 0.7};
        const int kmax = get(cfg, "kmax", 4);
        Sink sink(cfg);
        auto& os = sink.stream();
        os << "k,s,L,N,lambda_k,residual\n";
        bool ok = true;
        for (double s : orders)
            for (int k = 0; k <= kmax; ++k) {
                const double r = eigen_residual(k, 1, s, grid);
                ok = ok && r <= 1e-3;
                os << k << ',' << format_shortest(s) << ',' << format_shortest(grid.L) << ',' << grid.N << ','
                   << format_shortest(euclid_eigenvalue(k, 1, s)) << ',' << format_shortest(r) << '\n';
            }
        return ok ? exit_ok : exit_assertion;
    }
    if (mode == "thm16") {
        json sub = cfg;
        sub["kind"] = "thm16";
        if (has(cfg, "family")) {
            const double s = get(cfg, "s", 0.5), q = get(cfg, "q", 3.0);
            GridSpec grid = default_thm16_grid();
            grid.L = get(cfg, "L", grid.L);
            grid.N = get<Index>(cfg, "N", grid.N);
            const std::string name = cfg.at("family").get<std::string>();
            auto r = thm16_deficit(euclid_family(name, s, grid), euclid_params(1, s, q), name);
            r.equality_case = name == "fstar";
            emit_reports(cfg, {r});
            const bool ok =
                r.deficit >= -euclid_tolerance && (!r.equality_case || std::abs(r.deficit) <= euclid_tolerance);
            return ok ? exit_ok : exit_assertion;
        }
        return cmd_verify(sub);
    }
    throw ParameterError("euclid: mode must be eigen or thm16");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral constants, deficits and flows of fractional interpolation inequalities on S^n"};
    app.require_subcommand(0, 1);
    Options opts;
    std::string top_config;
    app.add_option("--config", top_config, "JSON run config with a \"command\" field");

    struct Sub {
        CLI::App* app;
        std::string config;
    };
    std::map<std::string, Sub> subs;
    auto add_sub = [&](const std::string& name, const std::string& help) {
        CLI::App* sc = app.add_subcommand(name, help);
        auto& entry = subs[name];
        entry.app = sc;
        sc->add_option("--config", entry.config, "JSON run config; flags override its fields");
        opts.add(sc, "n", "--n", "sphere dimension");
        opts.add(sc, "s", "--s", "operator order");
        opts.add(sc, "q", "--q", "exponent");
        opts.add(sc, "out", "--out", "output path (stdout when omitted)");
        opts.add(sc, "seed", "--seed", "seed of the random field suite");
        opts.add(sc, "K", "--K", "bandwidth");
        return sc;
    };

    add_sub("constants", "parameter set and spectral columns");
    auto* verify = add_sub("verify", "deficits of the inequalities");
    opts.add(verify, "kind", "--kind", "inequality kind or all");
    opts.add(verify, "count", "--count", "number of suite fields");
    opts.add(verify, "field", "--field", "field descriptor JSON");
    opts.add(verify, "L", "--L", "Euclidean grid half width (thm16)");
    opts.add(verify, "N", "--N", "Euclidean grid size (thm16)");
    auto* scan = add_sub("scan", "monotonicity scan or constant landscape");
    opts.add(scan, "mode", "mode", "lemma22 | s_grid");
    opts.add(scan, "kmax", "--kmax", "largest degree");
    auto* flow = add_sub("flow", "fractional heat flow on S^1");
    opts.add(flow, "dt", "--dt", "time step");
    opts.add(flow, "tmax", "--tmax", "horizon");
    opts.add(flow, "sample_every", "--sample-every", "sampling interval");
    opts.add(flow, "eps", "--eps", "initial datum (1 + eps Y_1)^q");
    opts.add(flow, "field", "--field", "initial root field descriptor JSON");
    opts.add(flow, "summary", "--summary", "summary JSON path (stderr when omitted)");
    auto* euclid = add_sub("euclid", "Euclidean oracle checks");
    opts.add(euclid, "mode", "mode", "eigen | thm16");
    opts.add(euclid, "kmax", "--kmax", "largest eigenfunction degree");
    opts.add(euclid, "L", "--L", "grid half width");
    opts.add(euclid, "N", "--N", "grid size");
    opts.add(euclid, "family", "--family", "single thm16 trial field");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string command;
        std::string config_path = top_config;
        for (const auto& [name, sub] : subs)
            if (sub.app->parsed()) {
                command = name;
                if (!sub.config.empty())
                    config_path = sub.config;
            }
        json cfg = config_path.empty() ? json::object() : load_config(config_path);
        if (cfg.contains("command")) {
            const auto c = cfg.at("command").get<std::string>();
            if (command.empty())
                command = c;
            else if (c != command)
                throw ParameterError("config command \"" + c + "\" does not match subcommand \"" + command + "\"");
        }
        opts.merge_into(cfg);
        if (command == "constants")
            return cmd_constants(cfg);
        if (command == "verify")
            return cmd_verify(cfg);
        if (command == "scan")
            return cmd_scan(cfg);
        if (command == "flow")
            return cmd_flow(cfg);
        if (command == "euclid")
            return cmd_euclid(cfg);
        std::cerr << app.help();
        return exit_usage;
    } catch (const ParameterError& e) {
        std::cerr << "fracsphere: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "fracsphere: " << e.what() << '\n';
        return exit_usage;
    }
}
