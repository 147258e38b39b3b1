#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace triplewell {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { spectrum, stationary, sweep, grid, critical, correspond };
enum class OutputFormat { csv, json };

// Fully resolved run description; flags override config-file values.
struct RunConfig {
    Command command = Command::spectrum;

    double u = 0.0;
    double j = 0.0;
    double eps = 0.0;
    long n = 20;

    // sweep / correspond range
    std::string axis = "u";
    double from = 0.0;
    double to = 1.0;
    int steps = 61;

    // grid ranges (in units of J)
    double u_min = -3.0, u_max = 3.0;
    double eps_min = 0.0, eps_max = 1.0;
    int u_steps = 300, eps_steps = 300;

    std::string quantity = "n1";  // grid: n1|n2|n3 ; correspond: energy|occupations
    double tol = 1e-2;            // correspond
    long n_max = 60;              // correspond

    std::string family = "j0";  // critical: j0|eps0|scan
    bool eigenvalues = false;   // spectrum: emit the full spectrum

    std::string output;  // empty = stdout
    OutputFormat format = OutputFormat::csv;
    int precision = 12;
    std::string per = "none";  // energy normalization: J|eps|none
};

// Parses argv-style arguments (without the program name) and an optional
// key-value config file given via --config. Throws ConfigError with a
// diagnostic naming the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

// Tabular results shared by every command.
struct OutputTable {
    using Value = std::variant<double, long, bool, std::string>;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

// Locale-independent shortest form with the given significant digits.
std::string format_double(double value, int precision);

// CSV with a header row; '\n' line endings; '.' decimal separator.
std::string emit_csv(const OutputTable& table, int precision);

// JSON object with a `meta` parameter echo and a `rows` array of objects.
// Floating-point values are rounded to the configured significant digits.
std::string emit_json(const OutputTable& table, const RunConfig& config);

// Executes the configured command. Throws on numerical failure.
OutputTable run_command(const RunConfig& config);

// Serializes per the configured format.
std::string emit(const OutputTable& table, const RunConfig& config);

}  // namespace triplewell
