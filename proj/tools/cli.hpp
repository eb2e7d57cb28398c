#ifndef DISKBOTTLE_TOOLS_CLI_HPP
#define DISKBOTTLE_TOOLS_CLI_HPP

#include "bottle/field.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bottle::cli {

// exit codes of the tool
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    std::string field_profile = "constant";     // constant | polynomial | zero
    std::vector<double> field_coeffs = {1.0};
    double m = 1.0;
    double beta = 1.0;

    std::string potential_profile = "zero";     // zero | constant | polynomial
    std::vector<double> potential_coeffs;

    std::vector<double> lambdas;
    int grid_n = 20000;
    double t_min = -14.0;
    bool log_solver = false;       // set when tmin was given explicitly
    bool alpha_auto = true;
    double alpha = 0.0;
    std::string format = "csv";                 // csv | json
    std::string out_path;                       // empty: stdout
    int samples = 4096;
    bool has_well = false;
    double well_depth = 0.0;
    double well_half_width = 0.0;
};

// Parse the JSON config document; unknown keys and malformed values fail
// with a field-precise message.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

RadialField config_field(const RunConfig& cfg);
RadialPotential config_potential(const RunConfig& cfg);

int cmd_bound(const RunConfig& cfg, std::ostream& out);
int cmd_count(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_greens(const RunConfig& cfg, std::ostream& out);
int cmd_propjp(const RunConfig& cfg, std::ostream& out);
int cmd_hlt(const RunConfig& cfg, std::ostream& out);
int cmd_example(const RunConfig& cfg, std::ostream& out);

// Full command-line entry point (flag parsing, config loading, dispatch,
// exception-to-exit-code mapping).
int run_cli(int argc, const char* const* argv);

// 12-significant-digit number formatting shared by every emitter.
std::string format_number(double v);

} // namespace bottle::cli

#endif
