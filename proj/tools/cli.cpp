#include "cli.hpp"

#include "bottle/bounds.hpp"
#include "bottle/error.hpp"
#include "bottle/green.hpp"
#include "bottle/line_potential.hpp"
#include "bottle/specfun.hpp"
#include "bottle/spectral.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bottle::cli {

using nlohmann::json;

namespace {

// first Dirichlet eigenvalue of the unit disk (squared first zero of the
// oscillatory order-0 Bessel function), used by the calibration mode
constexpr double kDiskGroundEnergy = 5.7831859629467846;

struct TableDoc {
    std::string command;
    std::vector<std::string> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& c)
{
    if (c.is_string()) return c.get<std::string>();
    if (c.is_number_integer()) return std::to_string(c.get<long long>());
    return format_number(c.get<double>());
}

void emit(const TableDoc& doc, const RunConfig& cfg, std::ostream& os)
{
    if (cfg.format == "json") {
        json j;
        j["command"] = doc.command;
        j["notes"] = doc.notes;
        j["columns"] = doc.columns;
        j["rows"] = doc.rows;
        os << j.dump(2) << '\n';
        return;
    }
    for (const auto& n : doc.notes) os << "# " << n << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
        os << (i ? "," : "") << doc.columns[i];
    os << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

double get_number(const json& j, const std::string& key, double fallback,
                  bool* present = nullptr)
{
    if (!j.contains(key)) {
        if (present) *present = false;
        return fallback;
    }
    if (present) *present = true;
    if (!j[key].is_number())
        throw ConfigError("config: '" + key + "' must be a number");
    return j[key].get<double>();
}

std::vector<double> get_array(const json& j, const std::string& key)
{
    if (!j[key].is_array())
        throw ConfigError("config: '" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number())
            throw ConfigError("config: '" + key + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where)
{
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) { ok = true; break; }
        if (!ok)
            throw ConfigError("config: unknown key '" + item.key() + "' in " + where);
    }
}

void set_alpha(RunConfig& cfg, const std::string& text)
{
    if (text == "auto") {
        cfg.alpha_auto = true;
        return;
    }
    char* end = nullptr;
    const double a = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw ConfigError("config: alpha must be 'auto' or a number, got '" + text + "'");
    if (!(a > 0.0) || !(a < 1.0))
        throw ConfigError("config: alpha must lie in (0, 1)");
    cfg.alpha_auto = false;
    cfg.alpha = a;
}

std::vector<double> parse_number_list(const std::string& text, const char* what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw ConfigError(std::string("config: bad ") + what + " entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw ConfigError(std::string("config: empty ") + what + " list");
    return out;
}

void validate(const RunConfig& cfg)
{
    if (cfg.field_profile != "constant" && cfg.field_profile != "polynomial"
        && cfg.field_profile != "zero")
        throw ConfigError("config: field.profile must be constant|polynomial|zero");
    if (cfg.potential_profile != "zero" && cfg.potential_profile != "constant"
        && cfg.potential_profile != "polynomial")
        throw ConfigError("config: potential.profile must be zero|constant|polynomial");
    if (cfg.grid_n < 16)
        throw ConfigError("config: grid_n must be >= 16");
    if (!(cfg.t_min < 0.0))
        throw ConfigError("config: tmin must be negative");
    if (cfg.samples < 8)
        throw ConfigError("config: samples must be >= 8");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config: format must be csv|json");
    for (double l : cfg.lambdas)
        if (!(l > 0.0) || !std::isfinite(l))
            throw ConfigError("config: lambda values must be positive");
}

std::ostream& open_sink(const RunConfig& cfg, std::ofstream& file)
{
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path);
    if (!file)
        throw ConfigError("config: cannot open output path '" + cfg.out_path + "'");
    return file;
}

spectral::RadialGrid config_grid(const RunConfig& cfg)
{
    return spectral::RadialGrid(cfg.grid_n);
}

double resolve_alpha(const RunConfig& cfg, const RadialField& field, double lambda)
{
    return cfg.alpha_auto ? bounds::optimal_alpha(lambda, field.flux_norm()) : cfg.alpha;
}

LinePotential config_well(const RunConfig& cfg)
{
    return LinePotential::square(cfg.well_depth, cfg.well_half_width);
}

spectral::LineGrid line_grid_for(const LinePotential& w)
{
    spectral::LineGrid g;
    g.t_max = std::max(12.0, w.support_radius() + 9.0);
    g.n = static_cast<int>(500 * g.t_max);
    return g;
}

} // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

RunConfig parse_config_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");
    check_keys(j, {"field", "potential", "lambda", "grid_n", "tmin", "alpha",
                   "format", "out", "samples", "well"}, "top level");
    RunConfig cfg;
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (!f.is_object()) throw ConfigError("config: 'field' must be an object");
        check_keys(f, {"profile", "coeffs", "m", "beta"}, "field");
        if (f.contains("profile")) cfg.field_profile = f["profile"].get<std::string>();
        if (f.contains("coeffs")) cfg.field_coeffs = get_array(f, "coeffs");
        cfg.m = get_number(f, "m", cfg.m);
        cfg.beta = get_number(f, "beta", cfg.beta);
    }
    if (j.contains("potential")) {
        const auto& p = j["potential"];
        if (!p.is_object()) throw ConfigError("config: 'potential' must be an object");
        check_keys(p, {"profile", "coeffs"}, "potential");
        if (p.contains("profile")) cfg.potential_profile = p["profile"].get<std::string>();
        if (p.contains("coeffs")) cfg.potential_coeffs = get_array(p, "coeffs");
    }
    if (j.contains("lambda")) cfg.lambdas = get_array(j, "lambda");
    cfg.grid_n = static_cast<int>(get_number(j, "grid_n", cfg.grid_n));
    bool tmin_present = false;
    cfg.t_min = get_number(j, "tmin", cfg.t_min, &tmin_present);
    cfg.log_solver = tmin_present;
    if (j.contains("alpha")) {
        if (j["alpha"].is_string()) set_alpha(cfg, j["alpha"].get<std::string>());
        else set_alpha(cfg, format_number(j["alpha"].get<double>()));
    }
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
    cfg.samples = static_cast<int>(get_number(j, "samples", cfg.samples));
    if (j.contains("well")) {
        auto w = get_array(j, "well");
        if (w.size() != 2)
            throw ConfigError("config: 'well' must be [depth, half_width]");
        cfg.has_well = true;
        cfg.well_depth = w[0];
        cfg.well_half_width = w[1];
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

RadialField config_field(const RunConfig& cfg)
{
    if (cfg.field_profile == "zero")
        return RadialField::zero();
    if (cfg.field_coeffs.empty())
        throw ConfigError("config: field.coeffs must not be empty");
    const auto profile = cfg.field_profile == "constant"
        ? RadialProfile::constant(cfg.field_coeffs.front())
        : RadialProfile::polynomial(cfg.field_coeffs);
    try {
        return RadialField::make(profile, cfg.m, cfg.beta);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

RadialPotential config_potential(const RunConfig& cfg)
{
    try {
        if (cfg.potential_profile == "zero")
            return RadialPotential::zero();
        if (cfg.potential_coeffs.empty())
            throw ConfigError("config: potential.coeffs must not be empty");
        if (cfg.potential_profile == "constant")
            return RadialPotential::constant(cfg.potential_coeffs.front());
        return RadialPotential::polynomial(cfg.potential_coeffs);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

int cmd_bound(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.lambdas.empty())
        throw ConfigError("bound: requires a non-empty lambda list");
    const auto field = config_field(cfg);
    if (!field.admissible())
        throw ConfigError("bound: requires an admissible field");
    TableDoc doc;
    doc.command = "bound";
    doc.columns = {"lambda", "alpha", "term_ck", "term_kinetic", "term_flux", "total"};
    for (double lambda : cfg.lambdas) {
        const double a = resolve_alpha(cfg, field, lambda);
        const auto rep = bounds::bound_counting(field, lambda, a);
        doc.rows.push_back({rep.lambda, rep.alpha, rep.term_ck, rep.term_kinetic,
                            rep.term_flux, rep.total});
    }
    emit(doc, cfg, out);
    return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.lambdas.empty())
        throw ConfigError("count: requires a non-empty lambda list");
    const auto field = config_field(cfg);
    const auto grid = config_grid(cfg);
    spectral::CountOptions opts;
    if (cfg.log_solver) {
        // an explicit tmin selects the log-variable discretization
        opts.variable = spectral::CountOptions::Variable::log_radius;
        opts.t_min = cfg.t_min;
    }
    TableDoc doc;
    doc.command = "count";
    doc.columns = {"lambda", "count", "ell_min", "ell_max", "modes_used",
                   "grid_n", "variable"};
    for (double lambda : cfg.lambdas) {
        const auto rep = spectral::count_eigenvalues(field, lambda, grid, opts);
        doc.rows.push_back({rep.lambda, rep.total, rep.ell_min, rep.ell_max,
                            static_cast<long long>(rep.per_mode.size()), rep.grid_n,
                            std::string(1, rep.variable)});
    }
    emit(doc, cfg, out);
    return kExitOk;
}

namespace {

int verify_calibration(const RunConfig& cfg, const RadialField& field, std::ostream& out)
{
    TableDoc doc;
    doc.command = "verify";
    doc.notes.push_back("warning: (H1) violated, field has K = 0; "
                        "verification skipped, calibration-only mode");
    doc.columns = {"quantity", "computed", "reference", "rel_err"};
    const spectral::RadialGrid g1(cfg.grid_n);
    const spectral::RadialGrid g2(2 * cfg.grid_n);
    const double e1 = spectral::lowest_eigenvalue(field, g1);
    const double e2 = spectral::lowest_eigenvalue(field, g2);
    const double richardson = (4.0 * e2 - e1) / 3.0;
    const double rel = std::abs(richardson - kDiskGroundEnergy) / kDiskGroundEnergy;
    doc.rows.push_back({"disk_ground_energy", richardson, kDiskGroundEnergy, rel});
    emit(doc, cfg, out);
    return rel <= 0.01 ? kExitOk : kExitViolation;
}

int verify_potential(const RunConfig& cfg, const RadialField& field,
                     const RadialPotential& v, std::ostream& out)
{
    TableDoc doc;
    doc.command = "verify";
    doc.columns = {"lambda", "alpha", "count", "bound", "margin", "modes_used", "grid_n"};
    double best_bound = 0.0, best_alpha = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double a = 0.1 * i;
        const double b = bounds::bound_negative_count(field, v, a);
        if (i == 1 || b < best_bound) { best_bound = b; best_alpha = a; }
    }
    bool ok = true;
    int base_count = 0;
    std::size_t modes = 0;
    for (int doubling = 0; doubling < 3; ++doubling) {
        const spectral::RadialGrid g(cfg.grid_n << doubling);
        const auto rep = spectral::count_negative_with_potential(field, v, g);
        if (doubling == 0) {
            base_count = rep.total;
            modes = rep.per_mode.size();
        } else if (rep.total != base_count) {
            ok = false;
        }
    }
    if (base_count > best_bound) ok = false;
    doc.rows.push_back({0.0, best_alpha, base_count, best_bound,
                        best_bound - base_count, static_cast<long long>(modes),
                        cfg.grid_n});
    emit(doc, cfg, out);
    return ok ? kExitOk : kExitViolation;
}

} // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto field = config_field(cfg);
    if (!field.admissible())
        return verify_calibration(cfg, field, out);
    const auto v = config_potential(cfg);
    if (!v.is_zero())
        return verify_potential(cfg, field, v, out);

    if (cfg.lambdas.empty())
        throw ConfigError("verify: requires a non-empty lambda list");
    TableDoc doc;
    doc.command = "verify";
    doc.columns = {"lambda", "alpha", "count", "bound", "margin", "modes_used", "grid_n"};
    bool ok = true;
    for (double lambda : cfg.lambdas) {
        const double a = resolve_alpha(cfg, field, lambda);
        const auto bound = bounds::bound_counting(field, lambda, a);
        int base_count = 0;
        std::size_t modes = 0;
        for (int doubling = 0; doubling < 3; ++doubling) {
            const spectral::RadialGrid g(cfg.grid_n << doubling);
            const auto rep = spectral::count_eigenvalues(field, lambda, g);
            if (doubling == 0) {
                base_count = rep.total;
                modes = rep.per_mode.size();
            } else if (rep.total != base_count) {
                ok = false;
            }
        }
        if (base_count > bound.total) ok = false;
        doc.rows.push_back({lambda, a, base_count, bound.total,
                            bound.total - base_count,
                            static_cast<long long>(modes), cfg.grid_n});
    }
    emit(doc, cfg, out);
    return ok ? kExitOk : kExitViolation;
}

int cmd_greens(const RunConfig& cfg, std::ostream& out)
{
    TableDoc doc;
    doc.command = "greens";
    doc.columns = {"r", "k", "g", "bound"};
    const double k = 1.0;
    bool ok = true;
    for (int j = 1; j <= cfg.samples; ++j) {
        const double r = static_cast<double>(j) / (cfg.samples + 1.0);
        const auto s = green::green_diag(r, k);
        if (s.value > s.bound + 1e-12 || s.value < -1e-12) ok = false;
        doc.rows.push_back({s.r, s.k, s.value, s.bound});
    }
    emit(doc, cfg, out);
    return ok ? kExitOk : kExitViolation;
}

int cmd_propjp(const RunConfig& cfg, std::ostream& out)
{
    TableDoc doc;
    doc.command = "propjp";
    doc.columns = {"samples", "max_ratio", "argmax_r"};
    double worst = 0.0, arg = 0.0;
    for (int j = 1; j <= cfg.samples; ++j) {
        const double r = static_cast<double>(j) / cfg.samples;
        const double ratio = green::propjp_ratio(r);
        if (ratio > worst) { worst = ratio; arg = r; }
    }
    doc.rows.push_back({cfg.samples, worst, arg});
    emit(doc, cfg, out);
    return worst <= 1.0 + 1e-12 ? kExitOk : kExitViolation;
}

int cmd_hlt(const RunConfig& cfg, std::ostream& out)
{
    std::vector<LinePotential> wells;
    if (cfg.has_well) {
        wells.push_back(config_well(cfg));
    } else {
        wells.push_back(LinePotential::square(1.0, 1.0));
        wells.push_back(LinePotential::square(5.0, 1.0));
        wells.push_back(LinePotential::square(25.0, 1.0));
        wells.push_back(LinePotential::sech2(2.0));
    }
    TableDoc doc;
    doc.command = "hlt";
    doc.columns = {"kind", "depth", "half_width", "sum_sqrt_nu", "half_integral", "margin"};
    bool ok = true;
    for (const auto& w : wells) {
        const auto nus = spectral::line_schrodinger_negatives(w, line_grid_for(w));
        double sum = 0.0;
        for (double nu : nus) sum += std::sqrt(nu);
        const double rhs = bounds::hlt_rhs(w);
        if (sum > rhs + 1e-9) ok = false;
        doc.rows.push_back({w.kind == LinePotential::Kind::square_well ? "square" : "sech2",
                            w.depth, w.half_width, sum, rhs, rhs - sum});
    }
    emit(doc, cfg, out);
    return ok ? kExitOk : kExitViolation;
}

int cmd_example(const RunConfig& cfg, std::ostream& out)
{
    const auto field = RadialField::make(RadialProfile::constant(1.0), 1.0, 1.0);
    const double i_ref = 2.0 * specfun::zeta3 - 1.5;
    const double i_got = field.flux_norm();
    const double ck_got = bounds::c_k(field.k_min());
    TableDoc doc;
    doc.command = "example";
    doc.columns = {"quantity", "computed", "reference", "abs_err"};
    doc.rows.push_back({"flux_norm_i", i_got, i_ref, std::abs(i_got - i_ref)});
    doc.rows.push_back({"c_k", ck_got, 1.5, std::abs(ck_got - 1.5)});
    emit(doc, cfg, out);
    const bool ok = std::abs(i_got - i_ref) <= 1e-6 && std::abs(ck_got - 1.5) <= 1e-12;
    return ok ? kExitOk : kExitViolation;
}

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"eigenvalue-counting bounds and direct spectra of radial "
                 "magnetic bottles on the unit disk"};
    app.require_subcommand(1);

    std::string config_path, lambda_csv, alpha_str, format, out_path, well_csv;
    int grid_n = 0, samples = 0;
    double tmin = 0.0;

    const char* names[] = {"bound", "count", "verify", "greens", "propjp", "hlt", "example"};
    const char* descs[] = {
        "evaluate the closed-form counting bound per lambda",
        "direct per-mode eigenvalue counts below each lambda",
        "compare direct counts against the bound; exit 1 on violation",
        "sample the resolvent diagonal against its closed-form majorant",
        "maximum of I0 K0 / (1 - log r) over (0, 1]",
        "line-potential spectral sums against half the potential integral",
        "reference constants of the log-growth unit field",
    };
    for (int i = 0; i < 7; ++i) {
        auto* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--lambda", lambda_csv, "comma-separated spectral thresholds");
        sub->add_option("--alpha", alpha_str, "'auto' or a value in (0,1)");
        sub->add_option("--grid-n", grid_n, "interior radial nodes per mode");
        sub->add_option("--tmin", tmin, "left end of the log-variable grid");
        sub->add_option("--format", format, "csv|json");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--samples", samples, "sample count for grid scans");
        sub->add_option("--well", well_csv, "square well 'depth,half_width'");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        auto* sub = app.get_subcommands().front();
        RunConfig cfg;
        if (sub->count("--config")) cfg = load_config_file(config_path);
        if (sub->count("--lambda")) cfg.lambdas = parse_number_list(lambda_csv, "lambda");
        if (sub->count("--alpha")) set_alpha(cfg, alpha_str);
        if (sub->count("--grid-n")) cfg.grid_n = grid_n;
        if (sub->count("--tmin")) {
            cfg.t_min = tmin;
            cfg.log_solver = true;
        }
        if (sub->count("--format")) cfg.format = format;
        if (sub->count("--out")) cfg.out_path = out_path;
        if (sub->count("--samples")) cfg.samples = samples;
        if (sub->count("--well")) {
            auto w = parse_number_list(well_csv, "well");
            if (w.size() != 2)
                throw ConfigError("config: --well expects 'depth,half_width'");
            cfg.has_well = true;
            cfg.well_depth = w[0];
            cfg.well_half_width = w[1];
        }
        validate(cfg);

        std::ofstream file;
        std::ostream& out = open_sink(cfg, file);
        const std::string name = sub->get_name();
        if (name == "bound") return cmd_bound(cfg, out);
        if (name == "count") return cmd_count(cfg, out);
        if (name == "verify") return cmd_verify(cfg, out);
        if (name == "greens") return cmd_greens(cfg, out);
        if (name == "propjp") return cmd_propjp(cfg, out);
        if (name == "hlt") return cmd_hlt(cfg, out);
        return cmd_example(cfg, out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace bottle::cli
