#pragma once

// Config parsing (atoms, grids) and deterministic CSV/JSON emission.
//
// All floating-point output is serialized at 17 significant digits so files
// round-trip bit-faithfully; CSV uses '.' decimals, ',' separators, a
// mandatory header row, and '\n' line endings.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include <json.hpp>

#include "cpplate/atom.hpp"
#include "cpplate/correlations.hpp"
#include "cpplate/errors.hpp"
#include "cpplate/potential.hpp"
#include "cpplate/quadrature.hpp"

namespace cpplate::io {

using nlohmann::json;

[[nodiscard]] inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[nodiscard]] inline bool file_exists(const std::string& path) {
    struct stat st {};
    return ::stat(path.c_str(), &st) == 0;
}

/// Resolve an input path: as given, or relative to $CPPLATE_CONFIG_DIR.
[[nodiscard]] inline std::string resolve_input_path(const std::string& path) {
    if (file_exists(path)) return path;
    if (const char* dir = std::getenv("CPPLATE_CONFIG_DIR"); dir != nullptr && path.size() > 0 &&
                                                             path.front() != '/') {
        const std::string joined = std::string(dir) + "/" + path;
        if (file_exists(joined)) return joined;
    }
    throw ValidationError("input file not found: " + path);
}

[[nodiscard]] inline json load_json_file(const std::string& path) {
    const std::string resolved = resolve_input_path(path);
    std::ifstream in(resolved);
    if (!in) throw ValidationError("cannot open " + resolved);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in " + resolved + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
    if (!out) throw ValidationError("failed writing " + path);
}

// ----------------------------------------------------------------------- atoms

[[nodiscard]] inline AtomSpec parse_atom(const json& j, const std::string& context) {
    if (!j.is_object()) throw InvalidAtomSpec(context + ": atom spec must be a JSON object");
    AtomSpec spec;
    spec.label = j.value("label", std::string("atom"));
    if (!j.contains("transitions") || !j.at("transitions").is_array())
        throw InvalidAtomSpec(context + ": atom spec needs a 'transitions' array");
    for (const auto& t : j.at("transitions")) {
        if (!t.is_object() || !t.contains("k") || !t.contains("mu2"))
            throw InvalidAtomSpec(context + ": each transition needs numeric 'k' and 'mu2'");
        Transition tr;
        tr.k = t.at("k").get<double>();
        tr.mu2 = t.at("mu2").get<double>();
        spec.transitions.push_back(tr);
    }
    validate_atom(spec);
    return spec;
}

[[nodiscard]] inline AtomSpec load_atom_file(const std::string& path) {
    return parse_atom(load_json_file(path), path);
}

[[nodiscard]] inline json atom_to_json(const AtomSpec& spec) {
    json j;
    j["label"] = spec.label;
    j["transitions"] = json::array();
    for (const auto& t : spec.transitions) j["transitions"].push_back({{"k", t.k}, {"mu2", t.mu2}});
    return j;
}

// ----------------------------------------------------------------------- grids

/// Axis spec: either an explicit list or {start, stop, count, spacing}.
[[nodiscard]] inline std::vector<double> parse_axis(const json& j, const std::string& name) {
    std::vector<double> out;
    if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_number()) throw InvalidGrid("axis '" + name + "' must contain numbers");
            out.push_back(v.get<double>());
        }
    } else if (j.is_number()) {
        out.push_back(j.get<double>());
    } else if (j.is_object()) {
        if (!j.contains("start") || !j.contains("stop") || !j.contains("count"))
            throw InvalidGrid("axis '" + name + "' range needs start, stop, count");
        const double start = j.at("start").get<double>();
        const double stop = j.at("stop").get<double>();
        const int count = j.at("count").get<int>();
        const std::string spacing = j.value("spacing", std::string("linear"));
        if (count < 1) throw InvalidGrid("axis '" + name + "' count must be >= 1");
        if (count == 1) {
            out.push_back(start);
        } else if (spacing == "linear") {
            for (int i = 0; i < count; ++i)
                out.push_back(start + (stop - start) * i / (count - 1));
        } else if (spacing == "log") {
            if (!(start > 0.0) || !(stop > 0.0))
                throw InvalidGrid("axis '" + name + "' log spacing needs positive endpoints");
            for (int i = 0; i < count; ++i)
                out.push_back(start * std::pow(stop / start, static_cast<double>(i) / (count - 1)));
        } else {
            throw InvalidGrid("axis '" + name + "' spacing must be 'linear' or 'log'");
        }
    } else {
        throw InvalidGrid("axis '" + name + "' must be a number, list, or range object");
    }
    if (out.empty()) throw InvalidGrid("axis '" + name + "' is empty");
    return out;
}

inline void apply_quadrature_overrides(QuadratureConfig& cfg, const json& j) {
    if (!j.is_object()) throw ValidationError("'quadrature' must be a JSON object");
    if (j.contains("rel_tol")) cfg.rel_tol = j.at("rel_tol").get<double>();
    if (j.contains("abs_tol")) cfg.abs_tol = j.at("abs_tol").get<double>();
    if (j.contains("max_subdivisions")) cfg.max_subdivisions = j.at("max_subdivisions").get<int>();
    if (j.contains("regulator_etas"))
        cfg.regulator_etas = j.at("regulator_etas").get<std::vector<double>>();
    if (j.contains("extrapolation_order"))
        cfg.extrapolation_order = j.at("extrapolation_order").get<int>();
    if (j.contains("panel_points")) cfg.panel_points = j.at("panel_points").get<int>();
    if (j.contains("panels_per_period"))
        cfg.panels_per_period = j.at("panels_per_period").get<double>();
    if (j.contains("semi_infinite_map")) {
        const std::string m = j.at("semi_infinite_map").get<std::string>();
        if (m == "rational")
            cfg.semi_infinite_map = QuadratureConfig::Map::rational;
        else if (m == "exp_sinh")
            cfg.semi_infinite_map = QuadratureConfig::Map::exp_sinh;
        else
            throw ValidationError("semi_infinite_map must be 'rational' or 'exp_sinh'");
    }
    cfg.validate();
}

struct ScanConfig {
    std::vector<double> z_a, z_b, rho;
    std::vector<double> k;  // correlation scans only
    std::string atoms_a_path, atoms_b_path;
    std::vector<Method> methods;
    QuadratureConfig quad;
    std::string output;
    std::string format = "csv";
};

[[nodiscard]] inline ScanConfig parse_scan_config(const json& j, bool want_k) {
    if (!j.is_object()) throw InvalidGrid("grid config must be a JSON object");
    ScanConfig cfg;
    for (const char* key : {"z_a", "z_b", "rho"})
        if (!j.contains(key)) throw InvalidGrid(std::string("grid config needs axis '") + key + "'");
    cfg.z_a = parse_axis(j.at("z_a"), "z_a");
    cfg.z_b = parse_axis(j.at("z_b"), "z_b");
    cfg.rho = parse_axis(j.at("rho"), "rho");
    if (want_k && j.contains("k")) cfg.k = parse_axis(j.at("k"), "k");
    if (j.contains("atoms_a")) cfg.atoms_a_path = j.at("atoms_a").get<std::string>();
    if (j.contains("atoms_b")) cfg.atoms_b_path = j.at("atoms_b").get<std::string>();
    if (j.contains("methods"))
        for (const auto& m : j.at("methods")) cfg.methods.push_back(parse_method(m.get<std::string>()));
    if (j.contains("quadrature")) apply_quadrature_overrides(cfg.quad, j.at("quadrature"));
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("format")) {
        cfg.format = j.at("format").get<std::string>();
        if (cfg.format != "csv" && cfg.format != "json")
            throw ValidationError("format must be 'csv' or 'json'");
    }
    return cfg;
}

[[nodiscard]] inline ScanConfig load_scan_config(const std::string& path, bool want_k = false) {
    return parse_scan_config(load_json_file(path), want_k);
}

[[nodiscard]] inline std::vector<GridPoint> expand_grid(const ScanConfig& cfg) {
    std::vector<GridPoint> pts;
    pts.reserve(cfg.z_a.size() * cfg.z_b.size() * cfg.rho.size());
    for (double za : cfg.z_a)
        for (double zb : cfg.z_b)
            for (double rho : cfg.rho) pts.push_back({za, zb, rho});
    return pts;
}

// ----------------------------------------------------------------- CSV helpers

[[nodiscard]] inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

// ------------------------------------------------------------------- potential

struct ScanRow {
    GridPoint point;
    PotentialResult result;
};

inline constexpr const char* kPotentialCsvHeader =
    "z_a,z_b,rho,r,rbar,method,value,reduced_coefficient,error_estimate";

[[nodiscard]] inline std::string potential_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kPotentialCsvHeader << "\n";
    for (const auto& row : rows) {
        const PotentialResult& r = row.result;
        out << format_double(row.point.z_a) << ',' << format_double(row.point.z_b) << ','
            << format_double(row.point.rho) << ',' << format_double(r.r) << ','
            << format_double(r.rbar) << ',' << method_name(r.method) << ','
            << format_double(r.value) << ',' << format_double(r.reduced_coefficient) << ','
            << format_double(r.error_estimate) << "\n";
    }
    return out.str();
}

[[nodiscard]] inline json result_to_json(const GridPoint& p, const PotentialResult& r) {
    json j;
    j["geometry"] = {{"z_a", p.z_a}, {"z_b", p.z_b}, {"rho", p.rho}, {"r", r.r}, {"rbar", r.rbar}};
    j["method"] = method_name(r.method);
    j["value"] = r.value;
    j["reduced_coefficient"] = r.reduced_coefficient;
    j["error_estimate"] = r.error_estimate;
    j["diagnostics"] = json::object();
    for (const auto& [key, val] : r.diagnostics) j["diagnostics"][key] = val;
    return j;
}

[[nodiscard]] inline std::string potential_json(const std::vector<ScanRow>& rows) {
    json j;
    j["schema"] = "cpplate-potential-v1";
    j["rows"] = json::array();
    for (const auto& row : rows) j["rows"].push_back(result_to_json(row.point, row.result));
    return j.dump(2) + "\n";
}

/// Structural validation mirroring schemas/result.schema.json.
inline void validate_result_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != "cpplate-potential-v1" ||
        !j.contains("rows") || !j.at("rows").is_array())
        throw ValidationError("result JSON fails schema: top level");
    for (const auto& row : j.at("rows")) {
        if (!row.is_object() || !row.contains("geometry") || !row.contains("method") ||
            !row.contains("value") || !row.contains("reduced_coefficient") ||
            !row.contains("error_estimate"))
            throw ValidationError("result JSON fails schema: row fields");
        const auto& g = row.at("geometry");
        for (const char* key : {"z_a", "z_b", "rho", "r"})
            if (!g.contains(key) || !g.at(key).is_number())
                throw ValidationError(std::string("result JSON fails schema: geometry.") + key);
        if (!row.at("value").is_number() || !row.at("error_estimate").is_number())
            throw ValidationError("result JSON fails schema: numeric fields");
    }
}

// ------------------------------------------------------------------ comparison

inline constexpr const char* kCompareCsvHeader =
    "z_a,z_b,rho,r,rbar,method,value,reduced_coefficient,error_estimate,max_rel_deviation,pass,"
    "error";

[[nodiscard]] inline std::string compare_csv(const std::vector<ComparePoint>& report) {
    std::ostringstream out;
    out << kCompareCsvHeader << "\n";
    for (const auto& row : report) {
        auto prefix = [&row, &out]() {
            out << format_double(row.point.z_a) << ',' << format_double(row.point.z_b) << ','
                << format_double(row.point.rho) << ',' << format_double(row.r) << ','
                << format_double(row.rbar) << ',';
        };
        for (const auto& r : row.results) {
            prefix();
            out << method_name(r.method) << ',' << format_double(r.value) << ','
                << format_double(r.reduced_coefficient) << ',' << format_double(r.error_estimate)
                << ',' << format_double(row.max_rel_deviation) << ','
                << (row.pass ? "true" : "false") << ",\n";
        }
        for (const auto& [name, msg] : row.failures) {
            prefix();
            out << name << ",,,," << format_double(row.max_rel_deviation) << ','
                << (row.pass ? "true" : "false") << ',' << csv_escape(msg) << "\n";
        }
    }
    return out.str();
}

[[nodiscard]] inline json compare_json(const std::vector<ComparePoint>& report) {
    json j;
    j["schema"] = "cpplate-compare-v1";
    j["rows"] = json::array();
    for (const auto& row : report) {
        json r;
        r["geometry"] = {{"z_a", row.point.z_a}, {"z_b", row.point.z_b}, {"rho", row.point.rho},
                         {"r", row.r}, {"rbar", row.rbar}};
        r["max_rel_deviation"] = row.max_rel_deviation;
        r["pass"] = row.pass;
        r["results"] = json::array();
        for (const auto& res : row.results) r["results"].push_back(result_to_json(row.point, res));
        r["failures"] = json::object();
        for (const auto& [name, msg] : row.failures) r["failures"][name] = msg;
        j["rows"].push_back(r);
    }
    return j;
}

/// Human-readable comparison report (stdout form).
[[nodiscard]] inline std::string compare_report_text(const std::vector<ComparePoint>& report,
                                                     double tol) {
    std::ostringstream out;
    std::size_t passed = 0, failed = 0;
    for (const auto& row : report) {
        out << "point z_a=" << format_double(row.point.z_a)
            << " z_b=" << format_double(row.point.z_b) << " rho=" << format_double(row.point.rho);
        if (!row.geometry_ok) {
            out << "  INVALID GEOMETRY: " << row.failures.at("geometry") << "\n";
            ++failed;
            continue;
        }
        out << "  (R=" << format_double(row.r) << ", Rbar=" << format_double(row.rbar) << ")\n";
        for (const auto& r : row.results)
            out << "    " << method_name(r.method) << ": value=" << format_double(r.value)
                << " reduced=" << format_double(r.reduced_coefficient)
                << " err=" << format_double(r.error_estimate) << "\n";
        for (const auto& [name, msg] : row.failures)
            out << "    " << name << ": FAILED (" << msg << ")\n";
        out << "    max pairwise rel deviation = " << format_double(row.max_rel_deviation)
            << (row.pass ? "  PASS" : "  FAIL") << "\n";
        row.pass ? ++passed : ++failed;
    }
    out << "summary: " << passed << "/" << (passed + failed) << " points within tol "
        << format_double(tol) << "\n";
    return out.str();
}

// ----------------------------------------------------------------- correlation

inline constexpr const char* kCorrelationCsvHeader =
    "k,z_a,z_b,rho,t_xx,t_xy,t_xz,t_yx,t_yy,t_yz,t_zx,t_zy,t_zz";

[[nodiscard]] inline std::string correlation_csv(const std::vector<CorrelationRow>& rows) {
    std::ostringstream out;
    out << kCorrelationCsvHeader << "\n";
    for (const auto& row : rows) {
        out << format_double(row.k) << ',' << format_double(row.z_a) << ','
            << format_double(row.z_b) << ',' << format_double(row.rho);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out << ',' << format_double(row.tensor(i, j));
        out << "\n";
    }
    return out.str();
}

[[nodiscard]] inline std::string correlation_json(const std::vector<CorrelationRow>& rows) {
    json j;
    j["schema"] = "cpplate-correlation-v1";
    j["rows"] = json::array();
    for (const auto& row : rows) {
        json r;
        r["k"] = row.k;
        r["z_a"] = row.z_a;
        r["z_b"] = row.z_b;
        r["rho"] = row.rho;
        r["tensor"] = json::array();
        for (int i = 0; i < 3; ++i) {
            json line = json::array();
            for (int jj = 0; jj < 3; ++jj) line.push_back(row.tensor(i, jj));
            r["tensor"].push_back(line);
        }
        j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
}

}  // namespace cpplate::io
