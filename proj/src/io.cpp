#include "triplewell/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace triplewell {

namespace {

const std::map<std::string, Command> kCommands{
    {"spectrum", Command::spectrum}, {"stationary", Command::stationary},
    {"sweep", Command::sweep},       {"grid", Command::grid},
    {"critical", Command::critical}, {"correspond", Command::correspond},
};

std::string command_name(Command c) {
    for (const auto& [name, cmd] : kCommands)
        if (cmd == c) return name;
    return "?";
}

bool needs_csv_quoting(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_escape(const std::string& s) {
    if (!needs_csv_quoting(s)) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string command;
    std::string format = "csv";

    CLI::App app{"Triple-well boson toolkit: exact diagonalization, semiclassical "
                 "stationary points, and correspondence scans"};
    app.name("triplewell");
    app.allow_config_extras(false);
    app.set_config("--config", "", "flat key=value config file; flags take precedence");

    app.add_option("command", command, "one of: spectrum, stationary, sweep, grid, critical, correspond")
        ->required()
        ->check(CLI::IsMember({"spectrum", "stationary", "sweep", "grid", "critical", "correspond"}));

    app.add_option("--u", cfg.u, "interaction strength U");
    app.add_option("--j", cfg.j, "tunneling amplitude J");
    app.add_option("--eps", cfg.eps, "tilt epsilon");
    app.add_option("--n", cfg.n, "boson number N");

    app.add_option("--axis", cfg.axis, "swept parameter: u, j or eps");
    app.add_option("--from", cfg.from, "sweep range start");
    app.add_option("--to", cfg.to, "sweep range end");
    app.add_option("--steps", cfg.steps, "sweep point count");

    app.add_option("--umin", cfg.u_min, "grid U/J minimum");
    app.add_option("--umax", cfg.u_max, "grid U/J maximum");
    app.add_option("--emin", cfg.eps_min, "grid eps/J minimum");
    app.add_option("--emax", cfg.eps_max, "grid eps/J maximum");
    app.add_option("--usteps", cfg.u_steps, "grid U axis point count");
    app.add_option("--esteps", cfg.eps_steps, "grid eps axis point count");

    app.add_option("--quantity", cfg.quantity, "grid: n1|n2|n3; correspond: energy|occupations");
    app.add_option("--tol", cfg.tol, "correspond: agreement tolerance");
    app.add_option("--nmax", cfg.n_max, "correspond: largest N to try");
    app.add_option("--family", cfg.family, "critical: j0 or eps0");
    app.add_flag("--eigenvalues", cfg.eigenvalues, "spectrum: emit the full spectrum");

    app.add_option("--output", cfg.output, "output path (default: stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", cfg.precision, "significant digits for reals")
        ->check(CLI::Range(1, 17));
    app.add_option("--per", cfg.per, "energy normalization: J, eps or none")
        ->check(CLI::IsMember({"J", "j", "eps", "none"}));

    for (const std::string& a : args) {
        if (a.rfind("--", 0) != 0 || a == "--") continue;
        const std::string name = a.substr(0, a.find('='));
        if (app.get_option_no_throw(name) == nullptr)
            throw ConfigError("unknown flag: " + name.substr(2));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    cfg.command = kCommands.at(command);
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    return cfg;
}

std::string format_double(double value, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::string emit_csv(const OutputTable& table, int precision) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            const auto& v = row[i];
            if (std::holds_alternative<double>(v))
                out += format_double(std::get<double>(v), precision);
            else if (std::holds_alternative<long>(v))
                out += std::to_string(std::get<long>(v));
            else if (std::holds_alternative<bool>(v))
                out += std::get<bool>(v) ? "true" : "false";
            else
                out += csv_escape(std::get<std::string>(v));
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const OutputTable& table, const RunConfig& config) {
    nlohmann::json meta{
        {"tool", "triplewell"},
        {"version", "1.0.0"},
        {"command", command_name(config.command)},
        {"u", config.u},
        {"j", config.j},
        {"eps", config.eps},
        {"n", config.n},
        {"axis", config.axis},
        {"from", config.from},
        {"to", config.to},
        {"steps", config.steps},
        {"umin", config.u_min},
        {"umax", config.u_max},
        {"emin", config.eps_min},
        {"emax", config.eps_max},
        {"usteps", config.u_steps},
        {"esteps", config.eps_steps},
        {"quantity", config.quantity},
        {"tol", config.tol},
        {"nmax", config.n_max},
        {"family", config.family},
        {"per", config.per},
        {"precision", config.precision},
    };

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& v = row[i];
            const std::string& col = table.columns[i];
            if (std::holds_alternative<double>(v)) {
                // Round to the configured significant digits.
                obj[col] = std::strtod(
                    format_double(std::get<double>(v), config.precision).c_str(), nullptr);
            } else if (std::holds_alternative<long>(v)) {
                obj[col] = std::get<long>(v);
            } else if (std::holds_alternative<bool>(v)) {
                obj[col] = std::get<bool>(v);
            } else {
                obj[col] = std::get<std::string>(v);
            }
        }
        rows.push_back(obj);
    }

    nlohmann::json doc{{"meta", meta}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string emit(const OutputTable& table, const RunConfig& config) {
    return config.format == OutputFormat::json ? emit_json(table, config)
                                               : emit_csv(table, config.precision);
}

}  // namespace triplewell
