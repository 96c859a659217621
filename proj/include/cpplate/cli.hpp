#pragma once

// Command-line front end. `run(args)` is the whole program (tools/ wraps it in
// main) so tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 validation/usage error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpplate/atom.hpp"
#include "cpplate/contraction.hpp"
#include "cpplate/correlations.hpp"
#include "cpplate/errors.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/io.hpp"
#include "cpplate/potential.hpp"
#include "cpplate/tensors.hpp"
#include "cpplate/version.hpp"

namespace cpplate::cli {

[[nodiscard]] inline std::vector<double> parse_double_list(const std::string& s,
                                                           const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse " + what + " entry '" + tok + "' as a number");
        }
    }
    if (out.empty()) throw ValidationError(what + " list is empty");
    return out;
}

[[nodiscard]] inline Vec3 parse_position(const std::string& s, const std::string& what) {
    const std::vector<double> v = parse_double_list(s, what);
    if (v.size() != 3) throw ValidationError(what + " must be 'x,y,z'");
    return {v[0], v[1], v[2]};
}

struct CommonOptions {
    std::string atoms_a_path, atoms_b_path;
    std::string output;
    std::string format = "csv";
    double rel_tol = 0.0, abs_tol = 0.0;  // 0 = keep default
    std::string etas;
    int extrap_order = 0;
    std::string map_name;

    void add_quad_flags(CLI::App* cmd) {
        cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
        cmd->add_option("--etas", etas, "Abel regulator etas in units of R (comma list)");
        cmd->add_option("--extrap-order", extrap_order, "eta->0 extrapolation order");
        cmd->add_option("--map", map_name, "semi-infinite map: rational|exp_sinh");
    }

    void apply(QuadratureConfig& quad) const {
        if (rel_tol > 0.0) quad.rel_tol = rel_tol;
        if (abs_tol > 0.0) quad.abs_tol = abs_tol;
        if (!etas.empty()) quad.regulator_etas = parse_double_list(etas, "--etas");
        if (extrap_order > 0) quad.extrapolation_order = extrap_order;
        if (!map_name.empty()) {
            if (map_name == "rational")
                quad.semi_infinite_map = QuadratureConfig::Map::rational;
            else if (map_name == "exp_sinh")
                quad.semi_infinite_map = QuadratureConfig::Map::exp_sinh;
            else
                throw ValidationError("--map must be rational or exp_sinh");
        }
        quad.validate();
    }

    [[nodiscard]] AtomSpec atom_a() const {
        return atoms_a_path.empty() ? unit_static_atom(1.0, "A") : io::load_atom_file(atoms_a_path);
    }
    [[nodiscard]] AtomSpec atom_b() const {
        return atoms_b_path.empty() ? unit_static_atom(1.0, "B") : io::load_atom_file(atoms_b_path);
    }
};

namespace detail {

inline void emit_rows(const std::vector<io::ScanRow>& rows, const std::string& output,
                      const std::string& format, std::ostream& os) {
    const std::string body = (format == "json") ? io::potential_json(rows) : io::potential_csv(rows);
    if (output.empty()) {
        os << body;
    } else {
        io::write_text_file(output, body);
        os << "wrote " << rows.size() << " rows to " << output << "\n";
    }
}

[[nodiscard]] inline PotentialResult run_method(Method m, const AtomSpec& a, const AtomSpec& b,
                                                const PlateGeometry& g, const QuadratureConfig& quad,
                                                AlphaTreatment treatment) {
    switch (m) {
        case Method::far_zone_closed:
            return cp_far_zone_plate(alpha_static(a), alpha_static(b), g);
        case Method::correlation_wick:
            return cp_plate_correlation(a, b, g, quad, RegulatorMode::wick, treatment);
        case Method::correlation_abel:
            return cp_plate_correlation(a, b, g, quad, RegulatorMode::abel, treatment);
        case Method::double_integral_far:
            return cp_plate_double_integral_far(alpha_static(a), alpha_static(b), g, quad);
        case Method::free_space:
            return cp_free_space(a, b, g.r, quad, treatment);
    }
    throw ValidationError("unreachable method");
}

}  // namespace detail

// ------------------------------------------------------------------ potential

[[nodiscard]] inline int cmd_potential(const CommonOptions& opt, const std::string& method_str,
                                       const std::string& pos_a, const std::string& pos_b,
                                       const std::string& alpha_str, std::ostream& os) {
    QuadratureConfig quad;
    opt.apply(quad);
    const Method method = parse_method(method_str);
    const AlphaTreatment treatment =
        (alpha_str == "dynamic") ? AlphaTreatment::dynamic : AlphaTreatment::static_only;
    if (alpha_str != "static" && alpha_str != "dynamic")
        throw ValidationError("--alpha must be static or dynamic");
    const Vec3 ra = parse_position(pos_a, "--atom-a");
    const Vec3 rb = parse_position(pos_b, "--atom-b");
    const AtomSpec a = opt.atom_a();
    const AtomSpec b = opt.atom_b();
    const PlateGeometry g = build_geometry(ra, rb);
    const PotentialResult res = detail::run_method(method, a, b, g, quad, treatment);

    os << "method: " << method_name(res.method) << "\n";
    os << "geometry: R=" << io::format_double(g.r) << " Rbar=" << io::format_double(g.rbar)
       << " rho=" << io::format_double(g.rho) << "\n";
    os << "value: " << io::format_double(res.value) << "\n";
    os << "reduced_coefficient: " << io::format_double(res.reduced_coefficient) << "\n";
    os << "error_estimate: " << io::format_double(res.error_estimate) << "\n";
    if (!opt.output.empty()) {
        const std::vector<io::ScanRow> rows = {{{ra.z, rb.z, g.rho}, res}};
        detail::emit_rows(rows, opt.output, opt.format, os);
    }
    return 0;
}

// ----------------------------------------------------------------------- scan

[[nodiscard]] inline int cmd_scan(const CommonOptions& opt, const std::string& grid_path,
                                  const std::string& methods_csv, std::ostream& os) {
    io::ScanConfig cfg = io::load_scan_config(grid_path);
    opt.apply(cfg.quad);
    if (!opt.output.empty()) cfg.output = opt.output;
    if (opt.format != "csv" || cfg.format.empty()) cfg.format = opt.format;
    if (!methods_csv.empty()) {
        cfg.methods.clear();
        std::stringstream ss(methods_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) cfg.methods.push_back(parse_method(tok));
    }
    if (cfg.methods.empty()) cfg.methods = {Method::far_zone_closed};
    if (!opt.atoms_a_path.empty()) cfg.atoms_a_path = opt.atoms_a_path;
    if (!opt.atoms_b_path.empty()) cfg.atoms_b_path = opt.atoms_b_path;
    const AtomSpec a = cfg.atoms_a_path.empty() ? unit_static_atom(1.0, "A")
                                                : io::load_atom_file(cfg.atoms_a_path);
    const AtomSpec b = cfg.atoms_b_path.empty() ? unit_static_atom(1.0, "B")
                                                : io::load_atom_file(cfg.atoms_b_path);
    std::vector<io::ScanRow> rows;
    bool numerical_failure = false;
    for (const GridPoint& p : io::expand_grid(cfg)) {
        const PlateGeometry g = build_geometry_cylindrical(p.z_a, p.z_b, p.rho);
        for (Method m : cfg.methods) {
            try {
                rows.push_back({p, detail::run_method(m, a, b, g, cfg.quad,
                                                      AlphaTreatment::static_only)});
            } catch (const NumericalError& e) {
                std::cerr << "numerical failure at z_a=" << io::format_double(p.z_a)
                          << " z_b=" << io::format_double(p.z_b)
                          << " rho=" << io::format_double(p.rho) << " method=" << method_name(m)
                          << ": " << e.what() << "\n";
                numerical_failure = true;
            }
        }
    }
    detail::emit_rows(rows, cfg.output, cfg.format, os);
    return numerical_failure ? 2 : 0;
}

// -------------------------------------------------------------------- compare

[[nodiscard]] inline int cmd_compare(const CommonOptions& opt, const std::string& grid_path,
                                     double tol, std::ostream& os) {
    io::ScanConfig cfg = io::load_scan_config(grid_path);
    opt.apply(cfg.quad);
    if (!opt.atoms_a_path.empty()) cfg.atoms_a_path = opt.atoms_a_path;
    if (!opt.atoms_b_path.empty()) cfg.atoms_b_path = opt.atoms_b_path;
    const AtomSpec a = cfg.atoms_a_path.empty() ? unit_static_atom(1.0, "A")
                                                : io::load_atom_file(cfg.atoms_a_path);
    const AtomSpec b = cfg.atoms_b_path.empty() ? unit_static_atom(1.0, "B")
                                                : io::load_atom_file(cfg.atoms_b_path);
    const std::vector<Method> methods =
        cfg.methods.empty() ? default_compare_methods() : cfg.methods;
    const std::vector<ComparePoint> report =
        compare_methods(a, b, io::expand_grid(cfg), cfg.quad, tol, methods);
    os << io::compare_report_text(report, tol);
    const std::string out_path = !opt.output.empty() ? opt.output : cfg.output;
    if (!out_path.empty()) {
        if (opt.format == "json")
            io::write_text_file(out_path, io::compare_json(report).dump(2) + "\n");
        else
            io::write_text_file(out_path, io::compare_csv(report));
        os << "wrote comparison to " << out_path << "\n";
    }
    bool numerical_failure = false;
    for (const auto& row : report)
        for (const auto& [name, msg] : row.failures)
            if (name != "geometry") numerical_failure = true;
    return numerical_failure ? 2 : 0;
}

// ---------------------------------------------------------------- correlation

[[nodiscard]] inline int cmd_correlation(const CommonOptions& opt, const std::string& grid_path,
                                         const std::string& k_csv, std::ostream& os) {
    io::ScanConfig cfg = io::load_scan_config(grid_path, /*want_k=*/true);
    if (!k_csv.empty()) cfg.k = parse_double_list(k_csv, "--k");
    if (cfg.k.empty()) throw InvalidGrid("correlation scan needs k values (--k or grid 'k')");
    CorrelationScanConfig scan;
    scan.k = cfg.k;
    scan.z_a = cfg.z_a;
    scan.z_b = cfg.z_b;
    scan.rho = cfg.rho;
    const std::vector<CorrelationRow> rows = correlation_scan(scan);
    const std::string out_path = !opt.output.empty() ? opt.output : cfg.output;
    const std::string body =
        (opt.format == "json") ? io::correlation_json(rows) : io::correlation_csv(rows);
    if (out_path.empty()) {
        os << body;
    } else {
        io::write_text_file(out_path, body);
        os << "wrote " << rows.size() << " rows to " << out_path << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- oracle-check

[[nodiscard]] inline int cmd_oracle_check(int samples, unsigned seed, std::ostream& os) {
    if (samples < 1) throw ValidationError("--samples must be >= 1");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto random_direction = [&]() {
        // uniform on the sphere via z = 2u-1, phi uniform
        const double z = 2.0 * unif(rng) - 1.0;
        const double phi = 2.0 * kPi * unif(rng);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return Vec3{s * std::cos(phi), s * std::sin(phi), z};
    };
    os << "sample,kind,k,r,max_abs_dev,scale,rel_dev,tol,pass\n";
    int failures = 0;
    for (int i = 0; i < samples; ++i) {
        const double kr = 0.1 * std::pow(500.0, unif(rng));  // log-uniform in [0.1, 50]
        const double r = 0.5 + 1.5 * unif(rng);
        const double k = kr / r;
        const Vec3 rvec = random_direction() * r;

        const Mat3 tau_closed = tau_matrix(k, rvec);
        const AngularOracleResult ang = angular_oracle_tau(k, rvec);
        const double tau_dev = max_abs(tau_closed - ang.tensor);
        const bool tau_ok = tau_dev <= 1e-9 && ang.imag_residual <= 1e-12;
        os << i << ",tau," << io::format_double(k) << ',' << io::format_double(r) << ','
           << io::format_double(tau_dev) << ",1," << io::format_double(tau_dev) << ",1e-09,"
           << (tau_ok ? "true" : "false") << "\n";

        const Mat3 dip_closed = dipole_matrix(k, rvec);
        const double step = r * std::min(1e-3, 0.018 / std::max(kr, 1.0));
        const Mat3 dip_oracle = fd_oracle_dipole_richardson(k, rvec, step);
        const double scale = max_abs(dip_closed);
        const double dip_rel = max_abs(dip_closed - dip_oracle) / scale;
        const bool dip_ok = dip_rel <= 1e-6;
        os << i << ",dipole," << io::format_double(k) << ',' << io::format_double(r) << ','
           << io::format_double(max_abs(dip_closed - dip_oracle)) << ','
           << io::format_double(scale) << ',' << io::format_double(dip_rel) << ",1e-06,"
           << (dip_ok ? "true" : "false") << "\n";
        if (!tau_ok || !dip_ok) ++failures;
    }
    if (failures > 0) {
        std::cerr << failures << " oracle sample(s) out of tolerance\n";
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------------- selftest

[[nodiscard]] inline int cmd_selftest(unsigned seed, std::ostream& os) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int failed = 0;
    auto check = [&](const std::string& name, bool ok, double detail) {
        os << "selftest: " << name << " ... " << (ok ? "ok" : "FAIL") << " (worst "
           << io::format_double(detail) << ")\n";
        if (!ok) ++failed;
    };

    {  // geometry identity R sin(theta) = Rbar sin(theta_bar); Rbar >= R
        double worst = 0.0;
        bool order_ok = true;
        for (int i = 0; i < 1000; ++i) {
            const double za = 2.0 * unif(rng), zb = 2.0 * unif(rng);
            const double x = 4.0 * unif(rng) - 2.0, y = 4.0 * unif(rng) - 2.0;
            PlateGeometry g;
            try {
                g = build_geometry({0, 0, za}, {x, y, zb});
            } catch (const ValidationError&) {
                continue;
            }
            const double lhs = g.r * std::sqrt(g.sin2_theta);
            const double rhs = g.rbar * std::sqrt(g.sin2_theta_bar);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(g.r, g.rbar));
            if (g.rbar < g.r) order_ok = false;
        }
        check("geometry transverse identity", worst <= 1e-12 && order_ok, worst);
    }
    {  // boundary condition: tangential rows of the correlation density vanish
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double rho = 0.2 + 3.0 * unif(rng);
            const double zb = 0.1 + 2.0 * unif(rng);
            const double k = 0.2 + 3.0 * unif(rng);
            const PlateGeometry g = build_geometry_cylindrical(0.0, zb, rho);
            const Mat3 t = correlation_density(k, g).tensor.m;
            double tang = 0.0, zrow = 0.0;
            for (int c = 0; c < 3; ++c) {
                tang = std::max({tang, std::abs(t(0, c)), std::abs(t(1, c))});
                zrow = std::max(zrow, std::abs(t(2, c)));
            }
            worst = std::max(worst, tang / zrow);
        }
        check("conductor boundary rows", worst <= 1e-13, worst);
    }
    {  // kernel evenness under R -> -R and tau boundedness
        double worst = 0.0;
        bool bounded = true;
        for (int i = 0; i < 200; ++i) {
            const double k = 0.05 + 5.0 * unif(rng);
            const Vec3 rv{2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0, 2.0 * unif(rng) + 0.1};
            const Mat3 t1 = tau_matrix(k, rv), t2 = tau_matrix(k, rv * (-1.0));
            const Mat3 d1 = dipole_matrix(k, rv), d2 = dipole_matrix(k, rv * (-1.0));
            worst = std::max({worst, max_abs(t1 - t2), max_abs(d1 - d2) / max_abs(d1)});
            if (max_abs(t1) > 2.0) bounded = false;
        }
        check("kernel evenness and tau bound", worst == 0.0 && bounded, worst);
    }
    {  // rotation covariance about the plate normal
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double ang = 2.0 * kPi * unif(rng);
            const double c = std::cos(ang), s = std::sin(ang);
            Mat3 rot = Mat3::identity();
            rot(0, 0) = c; rot(0, 1) = -s; rot(1, 0) = s; rot(1, 1) = c;
            const Vec3 ra{unif(rng), unif(rng), 0.2 + unif(rng)};
            const Vec3 rb{unif(rng) + 0.5, unif(rng) - 1.0, 0.2 + 2.0 * unif(rng)};
            const double k = 0.3 + 2.0 * unif(rng);
            auto rotate_vec = [&rot](const Vec3& v) {
                return Vec3{rot(0, 0) * v.x + rot(0, 1) * v.y, rot(1, 0) * v.x + rot(1, 1) * v.y,
                            v.z};
            };
            const PlateGeometry g1 = build_geometry(ra, rb);
            const PlateGeometry g2 = build_geometry(rotate_vec(ra), rotate_vec(rb));
            const Mat3 t1 = tau_plate_matrix(k, g1.r_vec, g1.rbar_vec);
            const Mat3 t2 = tau_plate_matrix(k, g2.r_vec, g2.rbar_vec);
            const Mat3 conj = matmul(matmul(rot, t1), rot.transpose());
            worst = std::max(worst, max_abs(t2 - conj));
        }
        check("rotation covariance about normal", worst <= 1e-13, worst);
    }
    {  // phase expansion reproduces the direct contraction
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Vec3 ra{0, 0, 0.1 + 1.5 * unif(rng)};
            const Vec3 rb{2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0, 0.1 + 1.5 * unif(rng)};
            const PlateGeometry g = build_geometry(ra, rb);
            const ContractionExpansion ex = expand_contraction(g);
            for (double k : {0.4, 1.1, 3.7}) {
                const double direct = contraction_direct(k, g) * k * k * k;
                const double expanded = ex.eval_weighted(k);
                worst = std::max(worst, std::abs(direct - expanded) /
                                            std::max(std::abs(direct), 1e-12));
            }
        }
        check("phase expansion vs direct contraction", worst <= 1e-10, worst);
    }
    {  // wick static route vs far-zone closed form
        QuadratureConfig quad;
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const Vec3 ra{0, 0, 0.2 + unif(rng)};
            const Vec3 rb{unif(rng) - 0.5, unif(rng) - 0.5, 0.2 + unif(rng)};
            const PlateGeometry g = build_geometry(ra, rb);
            const AtomSpec a = unit_static_atom(1.0, "A");
            const PotentialResult w =
                cp_plate_correlation(a, a, g, quad, RegulatorMode::wick);
            const PotentialResult f = cp_far_zone_plate(1.0, 1.0, g);
            worst = std::max(worst, std::abs(w.value - f.value) / std::abs(f.value));
        }
        check("wick route vs closed far zone", worst <= 1e-9, worst);
    }
    {  // free-space anchor
        QuadratureConfig quad;
        const AtomSpec a = unit_static_atom(1.0, "A");
        const PotentialResult res =
            cp_free_space(a, a, 1.7, quad, AlphaTreatment::static_only);
        const double target = -23.0 / (4.0 * kPi * std::pow(1.7, 7));
        const double dev = std::abs(res.value - target) / std::abs(target);
        check("free-space static anchor", dev <= 1e-8, dev);
    }
    os << (failed == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failed == 0 ? 0 : 2;
}

// ------------------------------------------------------------------ dispatcher

[[nodiscard]] inline int run(const std::vector<std::string>& args, std::ostream& os = std::cout) {
    CLI::App app{std::string(kProgramName) +
                 " - Casimir-Polder potentials and vacuum correlations near a conducting plate"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string method_str = "far", pos_a, pos_b, alpha_str = "static";
    std::string grid_path, methods_csv, k_csv;
    double tol = 1e-5;
    int samples = 20;
    unsigned seed = 20260823;

    auto add_common = [&opt](CLI::App* cmd, bool with_atoms = true) {
        if (with_atoms) {
            cmd->add_option("--atoms-a", opt.atoms_a_path, "atom A spec JSON file");
            cmd->add_option("--atoms-b", opt.atoms_b_path, "atom B spec JSON file");
        }
        cmd->add_option("--output", opt.output, "output file path");
        cmd->add_option("--format", opt.format, "output format: csv|json");
        opt.add_quad_flags(cmd);
    };

    CLI::App* c_pot = app.add_subcommand("potential", "single potential evaluation");
    c_pot->add_option("--method", method_str, "far|wick|abel|double|free")->capture_default_str();
    c_pot->add_option("--atom-a", pos_a, "position of atom A as x,y,z")->required();
    c_pot->add_option("--atom-b", pos_b, "position of atom B as x,y,z")->required();
    c_pot->add_option("--alpha", alpha_str, "polarizability treatment: static|dynamic")
        ->capture_default_str();
    add_common(c_pot);

    CLI::App* c_scan = app.add_subcommand("scan", "grid scan of the potential");
    c_scan->add_option("--grid", grid_path, "grid config JSON")->required();
    c_scan->add_option("--method", methods_csv, "comma list of methods (overrides grid config)");
    add_common(c_scan);

    CLI::App* c_cmp = app.add_subcommand("compare", "cross-method comparison on a grid");
    c_cmp->add_option("--grid", grid_path, "grid config JSON")->required();
    c_cmp->add_option("--tol", tol, "pass/fail relative tolerance")->capture_default_str();
    add_common(c_cmp);

    CLI::App* c_corr = app.add_subcommand("correlation", "vacuum correlation maps");
    c_corr->add_option("--grid", grid_path, "grid config JSON")->required();
    c_corr->add_option("--k", k_csv, "comma list of wavenumbers");
    add_common(c_corr, /*with_atoms=*/false);

    CLI::App* c_oracle = app.add_subcommand("oracle-check", "closed forms vs numerical oracles");
    c_oracle->add_option("--samples", samples, "random samples per kernel")->capture_default_str();
    c_oracle->add_option("--seed", seed, "RNG seed")->capture_default_str();

    CLI::App* c_self = app.add_subcommand("selftest", "run the invariant suites");
    c_self->add_option("--seed", seed, "RNG seed")->capture_default_str();

    CLI::App* c_ver = app.add_subcommand("version", "print version");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit 0; usage errors are validation errors
    }

    try {
        if (c_ver->parsed()) {
            os << kProgramName << " " << kVersion << "\n";
            return 0;
        }
        if (c_pot->parsed()) return cmd_potential(opt, method_str, pos_a, pos_b, alpha_str, os);
        if (c_scan->parsed()) return cmd_scan(opt, grid_path, methods_csv, os);
        if (c_cmp->parsed()) return cmd_compare(opt, grid_path, tol, os);
        if (c_corr->parsed()) return cmd_correlation(opt, grid_path, k_csv, os);
        if (c_oracle->parsed()) return cmd_oracle_check(samples, seed, os);
        if (c_self->parsed()) return cmd_selftest(seed, os);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace cpplate::cli
