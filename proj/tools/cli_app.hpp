#pragma once
//
// Command-line front end. Exit codes: 0 success, 1 domain violation (or failed
// verification), 2 usage error.
//

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "offcenter/offcenter.hpp"

namespace offcenter::cli {

inline double parse_omega(const std::string& s) {
    if (s == "pi") return pi;
    return csv::parse_double(s);
}

inline std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline void write_iterate(std::ostream& out, const MapParams& p, double x0, int steps, bool lift_mode) {
    const auto xs = lift_mode ? iterate_lift(p, x0, steps) : iterate(p, x0, steps);
    csv::Table t{{"step", "x"}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({std::to_string(i), csv::format_double(xs[i])});
    csv::write_table(out, t);
}

inline csv::Table cycles_table(const std::vector<CycleRecord>& cycles) {
    csv::Table t{{"cycle_id", "period", "point_index", "x", "multiplier", "stability", "symmetry"}, {}};
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& c = cycles[i];
        for (std::size_t j = 0; j < c.points.size(); ++j)
            t.rows.push_back({std::to_string(i), std::to_string(c.period), std::to_string(j),
                              csv::format_double(c.points[j]), csv::format_double(c.multiplier),
                              std::string(to_string(c.stability)),
                              c.symmetry ? std::string(to_string(*c.symmetry)) : std::string("none")});
    }
    return t;
}

inline csv::Table curves_table(const std::vector<CurveSample>& samples) {
    csv::Table t{{"curve_id", "branch", "r", "omega", "x"}, {}};
    for (const auto& s : samples)
        t.rows.push_back({std::string(to_string(s.curve)), std::string(1, s.branch), csv::format_double(s.r),
                          csv::format_double(s.omega), csv::format_double(s.x)});
    return t;
}

/// Region classes over r in [0, 1) (r_i = i/K) by omega in (-pi, pi] (omega_j = -pi + (j+1) 2pi/M).
inline csv::Table regions_table(int r_steps, int omega_steps, unsigned threads) {
    if (r_steps < 1 || omega_steps < 1) throw DomainError("regions needs r-steps >= 1 and omega-steps >= 1");
    std::vector<std::vector<RegionClass>> rows(static_cast<std::size_t>(r_steps));
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const double r = static_cast<double>(i) / r_steps;
        auto& row = rows[i];
        for (int j = 0; j < omega_steps; ++j) {
            const double w = j + 1 == omega_steps ? pi : -pi + two_pi * (j + 1) / omega_steps;
            row.push_back(classify_region(r, w));
        }
    });
    csv::Table t{{"r", "omega", "class"}, {}};
    for (const auto& row : rows)
        for (const auto& c : row)
            t.rows.push_back({csv::format_double(c.r), csv::format_double(c.omega), std::string(to_string(c.region))});
    return t;
}

inline csv::Table constants_table(const ConstantsTable& ct) {
    csv::Table t{{"name", "value", "residual"}, {}};
    for (const auto& c : ct.rows())
        t.rows.push_back({c.name, csv::format_double(c.value), csv::format_double(c.residual)});
    return t;
}

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Off-center reflection circle map: orbits, cycles, bifurcation curves and constants"};
    app.require_subcommand(1);

    double r = 0.0, x0 = 0.0, r_min = 0.0, r_max = 0.0;
    std::string omega_text = "0";
    int steps = 0, period = 1, grid = 2048, r_steps = 0, omega_steps = 0, transient = 10000, samples = 200;
    unsigned threads = 0;
    bool lift_mode = false, symmetric = false;
    std::string out_path, which, only;
    std::uint64_t seed = verify::kDefaultSeed;

    auto* it = app.add_subcommand("iterate", "Trajectory of one initial point");
    it->add_option("--r", r, "radius 0 <= r < 1")->required();
    it->add_option("--omega", omega_text, "angle in (-pi, pi], or 'pi'")->required();
    it->add_option("--x0", x0, "initial angle")->required();
    it->add_option("--steps", steps, "number of steps")->required();
    it->add_flag("--lift", lift_mode, "emit unreduced lift values");

    auto* cy = app.add_subcommand("cycles", "Periodic orbits of a given period");
    cy->add_option("--r", r)->required();
    cy->add_option("--omega", omega_text)->required();
    cy->add_option("--period", period)->required();
    cy->add_option("--grid", grid, "grid cells per unit period (>= 512)");
    cy->add_flag("--symmetric", symmetric, "only symmetric cycles (omega in {0, pi}, even period)");

    auto* dg = app.add_subcommand("diagram", "Asymptotic orbits of both critical points over an r sweep");
    dg->add_option("--omega", omega_text)->required();
    dg->add_option("--r-min", r_min)->required();
    dg->add_option("--r-max", r_max)->required();
    dg->add_option("--r-steps", r_steps)->required();
    dg->add_option("--transient", transient);
    dg->add_option("--samples", samples);
    dg->add_option("--out", out_path, "output CSV file ('-' for stdout)")->required();
    dg->add_option("--threads", threads, "worker cap (0 = all cores)");

    auto* cv = app.add_subcommand("curves", "Bifurcation boundary curves and symmetric 2-cycle branches");
    cv->add_option("--which", which)->required()->check(CLI::IsMember({"saddle-node", "period-doubling", "c1", "c2"}));
    cv->add_option("--r-min", r_min)->required();
    cv->add_option("--r-max", r_max)->required();
    cv->add_option("--steps", steps)->required();

    auto* rg = app.add_subcommand("regions", "Fixed-point region classes over the parameter plane");
    rg->add_option("--r-steps", r_steps)->required();
    rg->add_option("--omega-steps", omega_steps)->required();
    rg->add_option("--threads", threads);

    auto* co = app.add_subcommand("constants", "Numerically solved bifurcation constants");

    auto* ve = app.add_subcommand("verify", "Run the verification checks");
    ve->add_option("--only", only, "comma-separated check ids");
    ve->add_option("--seed", seed, "PRNG seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (it->parsed()) {
            write_iterate(out, MapParams::make(r, parse_omega(omega_text)), x0, steps, lift_mode);
        } else if (cy->parsed()) {
            const MapParams p = MapParams::make(r, parse_omega(omega_text));
            CycleSet cs;
            if (symmetric) {
                if (period % 2 != 0) throw DomainError("symmetric cycles have even period");
                cs = find_symmetric_cycles(p, period / 2, grid);
            } else {
                cs = find_cycles(p, period, grid);
            }
            if (cs.unresolved_roots)
                err << "warning: distinct roots within one grid cell; raise --grid to resolve\n";
            csv::write_table(out, cycles_table(cs.cycles));
        } else if (dg->parsed()) {
            DiagramOptions o;
            o.omega = parse_omega(omega_text);
            o.r_min = r_min;
            o.r_max = r_max;
            o.r_steps = r_steps;
            o.transient = transient;
            o.samples = samples;
            o.threads = threads;
            const auto table = csv::diagram_table(orbit_diagram(o));
            if (out_path == "-") {
                csv::write_table(out, table);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw DomainError("cannot open output file " + out_path);
                csv::write_table(f, table);
            }
        } else if (cv->parsed()) {
            const CurveId id = which == "saddle-node"       ? CurveId::saddle_node
                               : which == "period-doubling" ? CurveId::period_doubling_fp
                               : which == "c1"              ? CurveId::symmetric_2cycle_omega0
                                                            : CurveId::symmetric_2cycle_omega_pi;
            csv::write_table(out, curves_table(sample_curve(id, r_min, r_max, steps)));
        } else if (rg->parsed()) {
            csv::write_table(out, regions_table(r_steps, omega_steps, threads));
        } else if (co->parsed()) {
            csv::write_table(out, constants_table(bifurcation_constants()));
        } else if (ve->parsed()) {
            const auto results = verify::run(split_ids(only), seed);
            out << verify::format_report(results);
            return verify::failure_count(results) == 0 ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace offcenter::cli
