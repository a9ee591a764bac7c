#include <catch2/catch_amalgamated.hpp>

#include "crws/graph_matrices.hpp"
#include "crws/identity.hpp"
#include "crws/sampling.hpp"
#include "crws/verify.hpp"
#include "crws/zeta.hpp"

using namespace crws;

TEST_CASE("weighted arc matrix specializations") {
    for (const Graph& g : {cycle_graph(3), complete_graph(4), petersen_graph()}) {
        const DenseMatrix m1 = weighted_arc_matrix(g, ArcWeighting::ones(g));
        const DenseMatrix edge = arc_adjacency_matrix(g) - flip_matrix(g);
        CHECK((m1 - edge).max_abs() == 0.0);

        ArcWeighting w = ArcWeighting::ones(g);
        std::fill(w.tau.begin(), w.tau.end(), Complex(0.0, 0.0));
        const DenseMatrix m2 = weighted_arc_matrix(g, w);
        const DenseMatrix neg_flip = Complex(-1.0, 0.0) * flip_matrix(g);
        CHECK((m2 - neg_flip).max_abs() == 0.0);
    }

    ArcWeighting undersized = ArcWeighting::ones(cycle_graph(3));
    undersized.tau.pop_back();
    CHECK_THROWS_AS(weighted_arc_matrix(cycle_graph(3), undersized), std::invalid_argument);
}

TEST_CASE("C3 with unit weights: two non-backtracking 3-cycles") {
    // the arc dynamics of C3 split into two disjoint 3-cycles, so
    // det(I - u M) = (1 - u^3)^2
    const Graph c3 = cycle_graph(3);
    const ArcWeighting w = ArcWeighting::ones(c3);
    for (const Complex u : {Complex(0.5, 0.0), Complex(0.3, 0.2), Complex(-0.7, 0.1)}) {
        const Complex expected = (1.0 - u * u * u) * (1.0 - u * u * u);
        CHECK(std::abs(zeta_recip_direct(c3, w, u) - expected) < 1e-13);
    }
    CHECK(zeta_recip_direct(c3, w, Complex(0.5, 0.0)).real() == Catch::Approx(0.765625));
}

TEST_CASE("zeta direct evaluations") {
    const Graph edge = parse_edge_list("2 1\n1 2");
    CHECK(std::abs(zeta_recip_direct(edge, ArcWeighting::ones(edge), Complex(0.5, 0.0)) - 1.0) <
          1e-15);

    for (const Graph& g : {complete_graph(4), petersen_graph()}) {
        const ArcWeighting w = ArcWeighting::random(g, 404);
        CHECK(std::abs(zeta_recip_direct(g, w, Complex(0.0, 0.0)) - 1.0) < 1e-15);
        CHECK(std::abs(zeta_recip_reduced(g, w, Complex(0.0, 0.0)) - 1.0) < 1e-15);
    }

    const Graph k4 = complete_graph(4);
    const Complex u(0.3, 0.0);
    CHECK(relative_deviation(zeta_recip_direct(k4, ArcWeighting::ones(k4), u),
                             ihara_recip_bass(k4, u)) < 1e-12);
}

TEST_CASE("reduced form agrees with the direct form") {
    const Graph irr = random_connected_graph(7, 4, 11);
    for (const Graph& g : {cycle_graph(5), complete_graph(4), complete_bipartite_graph(2, 3), irr}) {
        for (std::uint64_t k = 0; k < 3; ++k) {
            const ArcWeighting w = ArcWeighting::random(g, 900 + k);
            std::mt19937_64 rng = make_rng(77, k);
            const auto points = draw_sample_points(
                2 * static_cast<std::size_t>(g.edge_count()) + 1, SampleDomain::unit_disk, rng,
                [&](Complex u) { return weighted_zeta_pole_distance(g, w, u) >= 1e-6; });
            for (const Complex& u : points) {
                CHECK(relative_deviation(zeta_recip_direct(g, w, u), zeta_recip_reduced(g, w, u)) <=
                      1e-9);
            }
        }
    }
}

TEST_CASE("reduced form pole guard names the edge") {
    const Graph c3 = cycle_graph(3);
    ArcWeighting w = ArcWeighting::ones(c3);
    std::fill(w.mu.begin(), w.mu.end(), Complex(2.0, 0.0));  // poles at u = 1/2
    CHECK_THROWS_MATCHES(zeta_recip_reduced(c3, w, Complex(0.5, 0.0)), pole_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("edge 1")));
    // off the pole it evaluates and matches the direct form
    const Complex u(0.4, 0.1);
    CHECK(relative_deviation(zeta_recip_direct(c3, w, u), zeta_recip_reduced(c3, w, u)) <= 1e-10);
}

TEST_CASE("ihara zeta reciprocal forms") {
    const Graph c3 = cycle_graph(3);
    CHECK(std::abs(ihara_recip_edge(c3, Complex(0.0, 0.0)) - 1.0) < 1e-15);
    CHECK(ihara_recip_edge(c3, Complex(0.5, 0.0)).real() == Catch::Approx(0.765625));
    CHECK(ihara_recip_bass(c3, Complex(0.5, 0.0)).real() == Catch::Approx(0.765625));

    const Graph k4 = complete_graph(4);
    CHECK(relative_deviation(ihara_recip_edge(k4, Complex(0.3, 0.0)),
                             ihara_recip_bass(k4, Complex(0.3, 0.0))) <= 1e-9);

    const Graph pet = petersen_graph();
    CHECK(relative_deviation(ihara_recip_edge(pet, Complex(0.2, 0.0)),
                             ihara_recip_bass(pet, Complex(0.2, 0.0))) <= 1e-9);
}

TEST_CASE("bass form on trees") {
    const Graph edge = parse_edge_list("2 1\n1 2");
    // (1 - u^2)^{-1} pole at u = 1
    CHECK_THROWS_AS(ihara_recip_bass(edge, Complex(1.0, 0.0)), pole_error);
    // off the pole both forms are defined and equal (both are 1: B = J0)
    for (const Complex u : {Complex(0.5, 0.0), Complex(0.2, 0.7)}) {
        CHECK(std::abs(ihara_recip_edge(edge, u) - 1.0) < 1e-14);
        CHECK(std::abs(ihara_recip_bass(edge, u) - 1.0) < 1e-12);
    }
}

TEST_CASE("identity checks over the standard family") {
    for (const Graph& g : standard_family(42)) {
        const VerificationReport r1 = check_ihara_bass(g, 42);
        INFO(g.label() << " ihara_bass max dev " << r1.max_rel_dev);
        CHECK(r1.pass);
        CHECK(r1.samples.size() >= 2 * static_cast<std::size_t>(g.edge_count()) + 1);

        const VerificationReport r2 = check_weighted_zeta(g, 42);
        INFO(g.label() << " weighted_zeta max dev " << r2.max_rel_dev);
        CHECK(r2.pass);
    }
}
