#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crws/crw.hpp"
#include "crws/crw2.hpp"
#include "crws/graph.hpp"
#include "crws/grover.hpp"
#include "crws/identity.hpp"
#include "crws/sampling.hpp"
#include "crws/spectrum.hpp"
#include "crws/zeta.hpp"

namespace crws {

/// Default relative tolerance for determinant identities.
inline constexpr double kIdentityTol = 1e-9;
/// Default absolute tolerance for spectrum multiset comparisons (operators
/// here have norm O(1)).
inline constexpr double kSpectrumTol = 1e-8;
/// Pole margin required of identity sample points (stricter than the 1e-12
/// operation-level guard, so deviations are measured away from blowups).
inline constexpr double kSampleMargin = 1e-6;

struct SampleRecord {
    Complex point;
    Complex lhs;
    Complex rhs;
    double rel_dev = 0.0;
};

/// One identity checked on one graph: the sample points used, both-side
/// values, the worst deviation, and the verdict.
struct VerificationReport {
    std::string identity;
    std::string graph;
    std::vector<SampleRecord> samples;
    double max_rel_dev = 0.0;
    bool pass = false;
    std::string note;
};

namespace detail {

// FNV-1a; gives each (identity, graph) pair its own deterministic rng stream.
inline std::uint64_t label_stream(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace detail

/// Run one determinant identity at `count` admissible sample points.
/// A candidate point is admissible when it clears `pole_margin` (if given) by
/// kSampleMargin, the sides evaluate without pole_error, and both sides have
/// magnitude >= 1e-10 (so relative deviation is meaningful away from the
/// polynomial's zeros).
inline VerificationReport run_identity_check(
    std::string identity, std::string graph_label, std::size_t count, SampleDomain domain,
    std::uint64_t seed, const std::function<IdentitySides(Complex)>& sides,
    const std::function<double(Complex)>& pole_margin = nullptr, double tol = kIdentityTol) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.graph = std::move(graph_label);

    std::mt19937_64 rng = make_rng(seed, detail::label_stream(report.identity + "|" + report.graph));
    std::vector<std::pair<Complex, IdentitySides>> accepted;
    accepted.reserve(count);

    auto admissible = [&](Complex z) {
        if (pole_margin && pole_margin(z) < kSampleMargin) return false;
        IdentitySides s;
        try {
            s = sides(z);
        } catch (const pole_error&) {
            return false;
        }
        if (std::max(std::abs(s.lhs), std::abs(s.rhs)) < 1e-10) return false;
        accepted.emplace_back(z, s);
        return true;
    };
    draw_sample_points(count, domain, rng, admissible);

    report.samples.reserve(accepted.size());
    for (const auto& [z, s] : accepted) {
        const double dev = relative_deviation(s);
        report.samples.push_back(SampleRecord{z, s.lhs, s.rhs, dev});
        report.max_rel_dev = std::max(report.max_rel_dev, dev);
    }
    report.pass = report.max_rel_dev <= tol;
    return report;
}

/// Wrap a closed-form-vs-oracle multiset comparison as a report. Sample
/// records carry pair index as the point, the paired values as lhs/rhs, and
/// the absolute pair distance as rel_dev; max_rel_dev is the max pair
/// distance (absolute, tolerance kSpectrumTol unless overridden).
inline VerificationReport run_spectrum_check(std::string identity, std::string graph_label,
                                             const Spectrum& closed, const Spectrum& oracle,
                                             double tol = kSpectrumTol) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.graph = std::move(graph_label);

    const MatchReport match = multiset_match(closed, oracle, tol);
    report.samples.reserve(match.pairs.size());
    for (std::size_t i = 0; i < match.pairs.size(); ++i) {
        const auto& [c, o] = match.pairs[i];
        report.samples.push_back(
            SampleRecord{Complex(static_cast<double>(i), 0.0), c, o, std::abs(c - o)});
    }
    report.max_rel_dev = match.pass || match.pairs.empty()
                             ? match.max_distance
                             : (std::isfinite(match.max_distance) ? match.max_distance : -1.0);
    if (!std::isfinite(match.max_distance)) report.max_rel_dev = -1.0;
    report.pass = match.pass;
    report.note = match.note;
    return report;
}

// ---------------------------------------------------------------------------
// Standard graph family
// ---------------------------------------------------------------------------

/// C3..C8, K4, K5, Petersen, K2,3, K3,4, K4,4, and five seeded connected
/// graphs with n <= 10 (irregular in practice). Hits every identity's
/// hypothesis class: regular, semiregular bipartite, and neither.
inline std::vector<Graph> standard_family(std::uint64_t seed) {
    std::vector<Graph> family;
    for (int n = 3; n <= 8; ++n) family.push_back(cycle_graph(n));
    family.push_back(complete_graph(4));
    family.push_back(complete_graph(5));
    family.push_back(petersen_graph());
    family.push_back(complete_bipartite_graph(2, 3));
    family.push_back(complete_bipartite_graph(3, 4));
    family.push_back(complete_bipartite_graph(4, 4));
    family.push_back(random_connected_graph(6, 3, seed + 1));
    family.push_back(random_connected_graph(7, 4, seed + 2));
    family.push_back(random_connected_graph(8, 5, seed + 3));
    family.push_back(random_connected_graph(9, 4, seed + 4));
    family.push_back(random_connected_graph(10, 6, seed + 5));
    return family;
}

/// The five seeded members of the standard family (the tail).
inline std::vector<Graph> seeded_family(std::uint64_t seed) {
    std::vector<Graph> family;
    family.push_back(random_connected_graph(6, 3, seed + 1));
    family.push_back(random_connected_graph(7, 4, seed + 2));
    family.push_back(random_connected_graph(8, 5, seed + 3));
    family.push_back(random_connected_graph(9, 4, seed + 4));
    family.push_back(random_connected_graph(10, 6, seed + 5));
    return family;
}

// ---------------------------------------------------------------------------
// Per-identity checks
// ---------------------------------------------------------------------------

inline std::size_t u_point_count(const Graph& g) {
    return std::max<std::size_t>(2 * static_cast<std::size_t>(g.edge_count()) + 1, 11);
}

inline VerificationReport check_ihara_bass(const Graph& g, std::uint64_t seed,
                                           double tol = kIdentityTol) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    auto margin = [n, m](Complex u) {
        return m < n ? std::abs(1.0 - u * u) : std::numeric_limits<double>::infinity();
    };
    return run_identity_check(
        "ihara_bass", g.label(), u_point_count(g), SampleDomain::unit_disk, seed,
        [&g](Complex u) { return IdentitySides{ihara_recip_edge(g, u), ihara_recip_bass(g, u)}; },
        margin, tol);
}

inline VerificationReport check_weighted_zeta(const Graph& g, std::uint64_t seed,
                                              double tol = kIdentityTol) {
    VerificationReport report;
    report.identity = "weighted_zeta_reduction";
    report.graph = g.label();
    for (std::uint64_t k = 0; k < 3; ++k) {
        const ArcWeighting w = ArcWeighting::random(g, seed * 31 + k);
        VerificationReport one = run_identity_check(
            report.identity + "#" + std::to_string(k), g.label(), u_point_count(g),
            SampleDomain::unit_disk, seed,
            [&g, &w](Complex u) {
                return IdentitySides{zeta_recip_direct(g, w, u), zeta_recip_reduced(g, w, u)};
            },
            [&g, &w](Complex u) { return weighted_zeta_pole_distance(g, w, u); }, tol);
        report.samples.insert(report.samples.end(), one.samples.begin(), one.samples.end());
        report.max_rel_dev = std::max(report.max_rel_dev, one.max_rel_dev);
    }
    report.pass = report.max_rel_dev <= tol;
    return report;
}

inline VerificationReport check_grover_unitarity(const Graph& g, double tol = 1e-12) {
    const DenseMatrix u = grover_matrix(g);
    const DenseMatrix gram = u.conj_transpose() * u - DenseMatrix::identity(g.arc_count());
    VerificationReport report;
    report.identity = "grover_unitarity";
    report.graph = g.label();
    report.max_rel_dev = gram.max_abs();
    report.pass = report.max_rel_dev <= tol;
    report.note = "max-norm of U^T U - I";
    return report;
}

inline VerificationReport check_grover_charpoly(const Graph& g, std::uint64_t seed,
                                                double tol = kIdentityTol) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const std::size_t count = std::max<std::size_t>(2 * static_cast<std::size_t>(m) + 1, 20);
    auto margin = [n, m](Complex lambda) {
        return m == n ? std::numeric_limits<double>::infinity() : std::abs(lambda * lambda - 1.0);
    };
    return run_identity_check(
        "grover_charpoly", g.label(), count, SampleDomain::split_annulus, seed,
        [&g](Complex lambda) { return grover_charpoly_identity(g, lambda); }, margin, tol);
}

inline VerificationReport check_grover_spectrum(const Graph& g, double tol = kSpectrumTol) {
    return run_spectrum_check("grover_spectrum", g.label(), grover_spectrum_closed(g),
                              oracle_spectrum(grover_matrix(g), "oracle, " + g.label()), tol);
}

/// Row sums within 1e-12 of 1, entries >= 0, oracle spectrum inside the
/// closed unit disk, eigenvalue 1 present.
inline VerificationReport check_crw_stochasticity(const Graph& g) {
    const DenseMatrix p = crw_matrix(g);
    const int arcs = g.arc_count();

    double row_dev = 0.0;
    double min_entry = 0.0;
    for (int e = 0; e < arcs; ++e) {
        Complex sum = 0.0;
        for (int f = 0; f < arcs; ++f) {
            sum += p(e, f);
            min_entry = std::min(min_entry, p(e, f).real());
        }
        row_dev = std::max(row_dev, std::abs(sum - 1.0));
    }

    const Spectrum spec = oracle_spectrum(p, "oracle, " + g.label());
    double max_modulus = 0.0;
    double dist_to_one = std::numeric_limits<double>::infinity();
    for (const Complex& z : spec.values) {
        max_modulus = std::max(max_modulus, std::abs(z));
        dist_to_one = std::min(dist_to_one, std::abs(z - 1.0));
    }

    VerificationReport report;
    report.identity = "crw_stochasticity";
    report.graph = g.label();
    report.max_rel_dev = row_dev;
    report.pass = row_dev <= 1e-12 && min_entry >= 0.0 && max_modulus <= 1.0 + 1e-9 &&
                  dist_to_one <= kSpectrumTol;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "row-sum dev %.3e, min entry %.3e, max |lambda| %.12f, |lambda - 1| min %.3e",
                  row_dev, min_entry, max_modulus, dist_to_one);
    report.note = buf;
    return report;
}

inline VerificationReport check_crw_charpoly(const Graph& g, std::uint64_t seed,
                                             double tol = kIdentityTol) {
    return run_identity_check(
        "crw_charpoly", g.label(), u_point_count(g), SampleDomain::unit_disk, seed,
        [&g](Complex u) { return crw_charpoly_identity(g, u); },
        [&g](Complex u) { return crw_pole_distance(g, u); }, tol);
}

inline VerificationReport check_crw_charpoly_regular(const Graph& g, std::uint64_t seed,
                                                     double tol = kIdentityTol) {
    return run_identity_check(
        "crw_charpoly_regular", g.label(), u_point_count(g), SampleDomain::unit_disk, seed,
        [&g](Complex u) { return crw_charpoly_identity_regular(g, u); },
        [&g](Complex u) { return crw_pole_distance(g, u); }, tol);
}

inline VerificationReport check_crw_spectrum_regular(const Graph& g, double tol = kSpectrumTol) {
    return run_spectrum_check("crw_spectrum_regular", g.label(), crw_spectrum_regular(g),
                              oracle_spectrum(crw_matrix(g), "oracle, " + g.label()), tol);
}

inline VerificationReport check_crw_charpoly_semiregular(const BipartiteProfile& p,
                                                         std::uint64_t seed,
                                                         double tol = kIdentityTol) {
    const Graph& g = p.graph;
    return run_identity_check(
        "crw_charpoly_semiregular", g.label(), u_point_count(g), SampleDomain::unit_disk, seed,
        [&p](Complex u) { return crw_charpoly_identity_semiregular(p, u); },
        [&g](Complex u) { return crw_pole_distance(g, u); }, tol);
}

inline VerificationReport check_crw_spectrum_semiregular(const BipartiteProfile& p,
                                                         double tol = kSpectrumTol) {
    return run_spectrum_check("crw_spectrum_semiregular", p.graph.label(),
                              crw_spectrum_semiregular(p),
                              oracle_spectrum(crw_matrix(p.graph), "oracle, " + p.graph.label()),
                              tol);
}

/// Empirical sign resolution for the semiregular rhs at 10 sample points.
/// Passes iff exactly one convention matches; the resolved convention and
/// both deviations land in the note.
inline VerificationReport check_semiregular_sign(const BipartiteProfile& p, std::uint64_t seed,
                                                 double tol = kIdentityTol) {
    const Graph& g = p.graph;
    std::mt19937_64 rng = make_rng(seed, detail::label_stream("crw_semiregular_sign|" + g.label()));
    const std::vector<Complex> points = draw_sample_points(
        10, SampleDomain::unit_disk, rng,
        [&g](Complex u) { return crw_pole_distance(g, u) >= kSampleMargin; });

    VerificationReport report;
    report.identity = "crw_semiregular_sign";
    report.graph = g.label();
    try {
        const SemiregularSignResolution res = resolve_semiregular_sign(p, points, tol);
        report.pass = true;
        report.max_rel_dev = std::min(res.max_dev_plus, res.max_dev_minus);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "resolved: %s (dev %.3e); rejected: %s (dev %.3e)",
                      res.resolved == SemiregularSign::plus_form ? "plus_form" : "minus_form",
                      std::min(res.max_dev_plus, res.max_dev_minus),
                      res.resolved == SemiregularSign::plus_form ? "minus_form" : "plus_form",
                      std::max(res.max_dev_plus, res.max_dev_minus));
        report.note = buf;
        for (const Complex& u : points) {
            const IdentitySides s = crw_charpoly_identity_semiregular(p, u);
            report.samples.push_back(SampleRecord{u, s.lhs, s.rhs, relative_deviation(s)});
        }
    } catch (const std::runtime_error& err) {
        report.pass = false;
        report.max_rel_dev = -1.0;
        report.note = err.what();
    }
    return report;
}

inline std::string cycle_coin_label(int n, const CoinParams& coin) {
    return "C" + std::to_string(n) + " " + coin.label();
}

inline VerificationReport check_cycle_crw_charpoly(int n, const CoinParams& coin,
                                                   std::uint64_t seed, double tol = kIdentityTol) {
    return run_identity_check(
        "cycle_crw_charpoly", cycle_coin_label(n, coin), 4 * static_cast<std::size_t>(n) + 1,
        SampleDomain::outside_disk, seed,
        [n, &coin](Complex lambda) { return cycle_crw_charpoly_identity(n, coin, lambda); },
        nullptr, tol);
}

inline VerificationReport check_cycle_crw_spectrum(int n, const CoinParams& coin,
                                                   double tol = kSpectrumTol) {
    return run_spectrum_check(
        "cycle_crw_spectrum", cycle_coin_label(n, coin), cycle_crw_spectrum(n, coin),
        oracle_spectrum(cycle_crw_matrix(n, coin), "oracle, " + cycle_coin_label(n, coin)), tol);
}

/// The balanced-coin walk's oracle spectrum must equal Spec(T(C_n)) plus n
/// zeros: the walk degenerates to the simple random walk (plus a flat part).
inline VerificationReport check_cycle_srw_crosscheck(int n, double tol = kSpectrumTol) {
    const Graph cn = cycle_graph(n);
    Spectrum expected;
    expected.provenance = Provenance::closed_form;
    expected.source = "Spec(T(C" + std::to_string(n) + ")) + n zeros";
    for (double lt : srw_spectrum(cn)) expected.values.emplace_back(lt, 0.0);
    for (int k = 0; k < n; ++k) expected.values.emplace_back(0.0, 0.0);

    const Spectrum walk = oracle_spectrum(cycle_crw_matrix(n, CoinParams::balanced()),
                                          "oracle, balanced coin walk on C" + std::to_string(n));
    return run_spectrum_check("cycle_crw_srw_crosscheck", "C" + std::to_string(n), expected, walk,
                              tol);
}

inline VerificationReport check_uniform_crw_charpoly(const Graph& g, std::uint64_t seed,
                                                     double tol = kIdentityTol) {
    return run_identity_check(
        "uniform_crw_charpoly", g.label(), 4 * static_cast<std::size_t>(g.edge_count()) + 1,
        SampleDomain::outside_disk, seed,
        [&g](Complex lambda) { return uniform_crw_charpoly_identity(g, lambda); }, nullptr, tol);
}

inline VerificationReport check_uniform_crw_spectrum(const Graph& g, double tol = kSpectrumTol) {
    return run_spectrum_check("uniform_crw_spectrum", g.label(), uniform_crw_spectrum(g),
                              oracle_spectrum(uniform_crw_matrix(g), "oracle, " + g.label()), tol);
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

enum class Suite { all, zeta, grover, crw, crw2 };

inline const char* to_string(Suite s) {
    switch (s) {
        case Suite::all: return "all";
        case Suite::zeta: return "zeta";
        case Suite::grover: return "grover";
        case Suite::crw: return "crw";
        case Suite::crw2: return "crw2";
    }
    return "?";
}

struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool all_pass = true;
};

/// The four coin settings used by the crw2 suite (balanced, symmetric biased,
/// asymmetric, pure rotation).
inline std::vector<CoinParams> suite_coins() {
    return {CoinParams(0.5, 0.5, 0.5, 0.5), CoinParams(0.7, 0.3, 0.3, 0.7),
            CoinParams(0.9, 0.2, 0.1, 0.8), CoinParams(1.0, 0.0, 0.0, 1.0)};
}

inline void run_suite_into(Suite suite, double tol, std::uint64_t seed, SuiteResult& out) {
    const std::vector<Graph> family = standard_family(seed);

    if (suite == Suite::all) {
        run_suite_into(Suite::zeta, tol, seed, out);
        run_suite_into(Suite::grover, tol, seed, out);
        run_suite_into(Suite::crw, tol, seed, out);
        run_suite_into(Suite::crw2, tol, seed, out);
        return;
    }

    auto add = [&out](VerificationReport r) {
        out.all_pass = out.all_pass && r.pass;
        out.reports.push_back(std::move(r));
    };

    switch (suite) {
        case Suite::zeta:
            for (const Graph& g : family) {
                add(check_ihara_bass(g, seed, tol));
                add(check_weighted_zeta(g, seed, tol));
            }
            break;
        case Suite::grover:
            for (const Graph& g : family) {
                add(check_grover_unitarity(g));
                add(check_grover_charpoly(g, seed, tol));
                add(check_grover_spectrum(g));
            }
            break;
        case Suite::crw:
            for (const Graph& g : family) {
                add(check_crw_stochasticity(g));
                add(check_crw_charpoly(g, seed, tol));
                const auto d = g.regular_degree();
                if (d && *d >= 2) {
                    add(check_crw_charpoly_regular(g, seed, tol));
                    add(check_crw_spectrum_regular(g));
                }
                try {
                    const BipartiteProfile p = bipartite_profile(g);
                    add(check_crw_charpoly_semiregular(p, seed, tol));
                    if (p.edge_total >= p.vertex_total) add(check_crw_spectrum_semiregular(p));
                } catch (const std::invalid_argument&) {
                    // not semiregular bipartite; nothing to check here
                }
            }
            add(check_semiregular_sign(bipartite_profile(complete_bipartite_graph(2, 3)), seed, tol));
            break;
        case Suite::crw2: {
            for (int n : {3, 4, 5, 8}) {
                for (const CoinParams& coin : suite_coins()) {
                    add(check_cycle_crw_charpoly(n, coin, seed, tol));
                    add(check_cycle_crw_spectrum(n, coin));
                }
            }
            for (int n = 3; n <= 8; ++n) add(check_cycle_srw_crosscheck(n));
            for (const Graph& g : family) {
                const auto d = g.regular_degree();
                if (d && *d >= 2) {
                    add(check_uniform_crw_charpoly(g, seed, tol));
                    add(check_uniform_crw_spectrum(g));
                }
            }
            break;
        }
        case Suite::all:
            break;
    }
}

/// Run a verification suite over the standard family. Reports come back
/// sorted by (identity, graph); deterministic for fixed (tol, seed).
inline SuiteResult run_suite(Suite suite, double tol = kIdentityTol, std::uint64_t seed = 42) {
    SuiteResult result;
    run_suite_into(suite, tol, seed, result);
    std::stable_sort(result.reports.begin(), result.reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.identity != b.identity) return a.identity < b.identity;
                         return a.graph < b.graph;
                     });
    return result;
}

}  // namespace crws
