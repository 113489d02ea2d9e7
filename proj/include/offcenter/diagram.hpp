#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "offcenter/csv.hpp"
#include "offcenter/orbit.hpp"
#include "offcenter/parallel.hpp"

namespace offcenter {

constexpr std::string_view to_string(Seed s) noexcept {
    return s == Seed::crit_plus ? "crit_plus" : "crit_minus";
}

inline Seed parse_seed(std::string_view s) {
    if (s == "crit_plus") return Seed::crit_plus;
    if (s == "crit_minus") return Seed::crit_minus;
    throw DomainError("unknown seed id: " + std::string(s));
}

/// One asymptotic-orbit sample of a critical point.
struct DiagramRow {
    double r = 0.0;
    double omega = 0.0;
    Seed seed = Seed::crit_plus;
    int sample_index = 0;
    double x = 0.0;

    bool operator==(const DiagramRow&) const = default;
};

struct DiagramOptions {
    double omega = pi;
    double r_min = 0.35;
    double r_max = 0.95;
    int r_steps = 600;
    int transient = 10000;
    int samples = 200;
    unsigned threads = 0; ///< 0: hardware concurrency
};

/// r values of the sweep: r_steps points spanning [r_min, r_max] inclusive.
inline std::vector<double> diagram_r_values(const DiagramOptions& o) {
    std::vector<double> rs(static_cast<std::size_t>(o.r_steps));
    for (int i = 0; i < o.r_steps; ++i)
        rs[static_cast<std::size_t>(i)] =
            o.r_steps == 1 ? o.r_min : o.r_min + (o.r_max - o.r_min) * i / (o.r_steps - 1);
    return rs;
}

/// Asymptotic orbits of both critical points across an r sweep, sorted by
/// (r, seed, sample_index). Columns are computed in parallel and assembled in
/// ascending r, so the output does not depend on the thread count.
inline std::vector<DiagramRow> orbit_diagram(const DiagramOptions& o) {
    if (o.r_steps < 1) throw DomainError("diagram needs r-steps >= 1");
    if (!(o.r_min > 1.0 / 3.0)) throw DomainError("diagram seeds are the critical points, which need r-min > 1/3");
    if (!(o.r_max < 1.0) || o.r_max < o.r_min) throw DomainError("diagram needs r-min <= r-max < 1");
    if (o.transient < 0 || o.samples < 1) throw DomainError("diagram needs transient >= 0 and samples >= 1");
    (void)MapParams::make(o.r_min, o.omega);

    const auto rs = diagram_r_values(o);
    std::vector<std::vector<DiagramRow>> columns(rs.size());
    parallel_for(rs.size(), o.threads, [&](std::size_t i) {
        const MapParams p{rs[i], o.omega};
        const CriticalPair crit = critical_points(p.r);
        auto& col = columns[i];
        col.reserve(2 * static_cast<std::size_t>(o.samples));
        for (Seed s : {Seed::crit_plus, Seed::crit_minus}) {
            const double x0 = s == Seed::crit_plus ? crit.x_plus : crit.x_minus;
            const auto tail = asymptotic_orbit(p, x0, o.transient, o.samples);
            for (int k = 0; k < o.samples; ++k) col.push_back({p.r, p.omega, s, k, tail[static_cast<std::size_t>(k)]});
        }
    });
    std::vector<DiagramRow> rows;
    rows.reserve(rs.size() * 2 * static_cast<std::size_t>(o.samples));
    for (auto& col : columns) rows.insert(rows.end(), col.begin(), col.end());
    return rows;
}

namespace csv {

inline Table diagram_table(const std::vector<DiagramRow>& rows) {
    Table t{{"r", "omega", "seed_id", "sample_index", "x"}, {}};
    t.rows.reserve(rows.size());
    for (const auto& d : rows)
        t.rows.push_back({format_double(d.r), format_double(d.omega), std::string(to_string(d.seed)),
                          std::to_string(d.sample_index), format_double(d.x)});
    return t;
}

inline std::vector<DiagramRow> parse_diagram(const Table& t) {
    if (t.header != std::vector<std::string>{"r", "omega", "seed_id", "sample_index", "x"})
        throw DomainError("not a diagram CSV header");
    std::vector<DiagramRow> out;
    out.reserve(t.rows.size());
    for (const auto& f : t.rows)
        out.push_back({parse_double(f[0]), parse_double(f[1]), parse_seed(f[2]), static_cast<int>(parse_int(f[3])),
                       parse_double(f[4])});
    return out;
}

} // namespace csv

} // namespace offcenter
