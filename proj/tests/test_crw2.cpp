#include <catch2/catch_amalgamated.hpp>

#include "crws/crw2.hpp"
#include "crws/grover.hpp"
#include "crws/verify.hpp"

using namespace crws;

TEST_CASE("coin parameter validation") {
    CHECK_NOTHROW(CoinParams(0.5, 0.5, 0.5, 0.5));
    CHECK_NOTHROW(CoinParams(1.0, 0.0, 0.0, 1.0));
    CHECK_THROWS_AS(CoinParams(0.6, 0.5, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(CoinParams(0.5, 0.6, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(CoinParams(1.2, 0.5, -0.2, 0.5), std::invalid_argument);

    CHECK(CoinParams(0.7, 0.3, 0.3, 0.7).determinant() == Catch::Approx(0.4));
    CHECK(CoinParams(0.5, 0.5, 0.5, 0.5).determinant() == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("cycle coin walk matrix") {
    // pure rotation: block-diagonal pair of cyclic shifts, spectrum = n-th
    // roots of unity, each twice
    const CoinParams rotation(1.0, 0.0, 0.0, 1.0);
    const DenseMatrix u4 = cycle_crw_matrix(4, rotation);
    for (int i = 0; i < 4; ++i) {
        CHECK(u4(i, (i + 3) % 4) == Complex(1.0, 0.0));
        CHECK(u4(4 + i, 4 + (i + 1) % 4) == Complex(1.0, 0.0));
    }
    std::vector<Complex> roots;
    for (int j = 0; j < 4; ++j) {
        roots.push_back(std::polar(1.0, std::numbers::pi * j / 2.0));
        roots.push_back(std::polar(1.0, std::numbers::pi * j / 2.0));
    }
    CHECK(multiset_match(Spectrum{roots, Provenance::closed_form, "roots"},
                         oracle_spectrum(u4, "oracle"), 1e-9)
              .pass);

    // balanced coin on C3: entries in {0, 1/2}
    const DenseMatrix u3 = cycle_crw_matrix(3, CoinParams::balanced());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK((u3(i, j) == Complex(0.0, 0.0) || u3(i, j) == Complex(0.5, 0.0)));

    // columns sum to 1 for every coin and size
    for (int n : {3, 4, 5, 8}) {
        for (const CoinParams& coin : suite_coins()) {
            const DenseMatrix u = cycle_crw_matrix(n, coin);
            for (int j = 0; j < 2 * n; ++j) {
                Complex col = 0.0;
                for (int i = 0; i < 2 * n; ++i) col += u(i, j);
                CHECK(std::abs(col - 1.0) <= 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(cycle_crw_matrix(2, CoinParams::balanced()), std::invalid_argument);
}

TEST_CASE("cycle weight matrix") {
    // a = d = 1/2 gives A(C_n)/2
    for (int n : {3, 5}) {
        const DenseMatrix w = cycle_weight_matrix(n, CoinParams::balanced());
        const DenseMatrix half_a = Complex(0.5, 0.0) * adjacency_matrix(cycle_graph(n));
        CHECK((w - half_a).max_abs() == 0.0);
    }

    // a = d = 1 gives A(C_n)
    const DenseMatrix w1 = cycle_weight_matrix(4, CoinParams(1.0, 0.0, 0.0, 1.0));
    CHECK((w1 - adjacency_matrix(cycle_graph(4))).max_abs() == 0.0);

    // a = 0, d = 1 is the bare cyclic shift: eigenvalues i^k
    const DenseMatrix q = cycle_weight_matrix(4, CoinParams(0.0, 0.0, 1.0, 1.0));
    std::vector<Complex> expected;
    for (int j = 0; j < 4; ++j) expected.push_back(std::polar(1.0, std::numbers::pi * j / 2.0));
    CHECK(multiset_match(Spectrum{expected, Provenance::closed_form, "i^k"},
                         oracle_spectrum(q, "oracle"), 1e-10)
              .pass);
}

TEST_CASE("cycle coin charpoly identity") {
    // lambda = 0: both sides are (ad - bc)^n up to rounding
    const CoinParams coin(0.7, 0.3, 0.3, 0.7);
    for (int n : {3, 5}) {
        const IdentitySides s = cycle_crw_charpoly_identity(n, coin, Complex(0.0, 0.0));
        const double expected = std::pow(coin.determinant(), n);
        CHECK(std::abs(s.lhs - expected) <= 1e-12);
        CHECK(std::abs(s.rhs - expected) <= 1e-12);
    }

    // pure rotation at lambda = 1: eigenvalue 1 is present, both sides vanish
    const IdentitySides rot = cycle_crw_charpoly_identity(4, CoinParams(1.0, 0.0, 0.0, 1.0),
                                                          Complex(1.0, 0.0));
    CHECK(std::abs(rot.lhs) <= 1e-12);
    CHECK(std::abs(rot.rhs) <= 1e-12);

    std::mt19937_64 rng = make_rng(5);
    const auto points = draw_sample_points(10, SampleDomain::outside_disk, rng,
                                           [](Complex) { return true; });
    for (const Complex& lam : points)
        CHECK(relative_deviation(cycle_crw_charpoly_identity(5, coin, lam)) <= 1e-9);

    for (int n : {3, 4, 5, 8}) {
        for (const CoinParams& c : suite_coins()) {
            const VerificationReport r = check_cycle_crw_charpoly(n, c, 42);
            INFO("n=" << n << " " << c.label() << " max dev " << r.max_rel_dev);
            CHECK(r.pass);
            CHECK(r.samples.size() >= 4 * static_cast<std::size_t>(n) + 1);
        }
    }
}

TEST_CASE("cycle coin closed-form spectrum") {
    // frozen: a = d = 0.7, n = 3 gives {1, 0.4} and (-0.7 +/- i sqrt(1.11))/2 twice
    const CoinParams coin(0.7, 0.3, 0.3, 0.7);
    const Spectrum closed = cycle_crw_spectrum(3, coin);
    REQUIRE(closed.cardinality() == 6);
    const double im = std::sqrt(1.11) / 2.0;
    std::vector<Complex> expected = {{1.0, 0.0},   {0.4, 0.0},  {-0.35, im},
                                     {-0.35, -im}, {-0.35, im}, {-0.35, -im}};
    CHECK(multiset_match(closed, Spectrum{expected, Provenance::closed_form, "by hand"}, 1e-12)
              .pass);
    CHECK(multiset_match(closed, oracle_spectrum(cycle_crw_matrix(3, coin), "oracle"), 1e-8).pass);

    // pure rotation: lambda = e^{+/- i theta} on the unit circle
    const Spectrum rot = cycle_crw_spectrum(5, CoinParams(1.0, 0.0, 0.0, 1.0));
    for (const Complex& z : rot.values) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-12);

    // theta = 0 always contributes 1 and a + d - 1
    for (const CoinParams& c : suite_coins()) {
        const Spectrum s = cycle_crw_spectrum(4, c);
        auto contains = [&s](Complex target) {
            for (const Complex& z : s.values)
                if (std::abs(z - target) < 1e-10) return true;
            return false;
        };
        CHECK(contains(Complex(1.0, 0.0)));
        CHECK(contains(Complex(c.a + c.d - 1.0, 0.0)));
    }

    for (int n : {3, 4, 5, 8}) {
        for (const CoinParams& c : suite_coins()) {
            INFO("n=" << n << " " << c.label());
            CHECK(check_cycle_crw_spectrum(n, c).pass);
        }
    }
}

TEST_CASE("balanced coin spectrum") {
    const Spectrum s4 = cycle_crw_spectrum_balanced(4);
    std::vector<Complex> expected4 = {{1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0},
                                      {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},  {0.0, 0.0}};
    CHECK(multiset_match(s4, Spectrum{expected4, Provenance::closed_form, "by hand"}, 1e-12).pass);

    const Spectrum s3 = cycle_crw_spectrum_balanced(3);
    std::vector<Complex> expected3 = {{1.0, 0.0},  {-0.5, 0.0}, {-0.5, 0.0},
                                      {0.0, 0.0},  {0.0, 0.0},  {0.0, 0.0}};
    CHECK(multiset_match(s3, Spectrum{expected3, Provenance::closed_form, "by hand"}, 1e-12).pass);

    // the balanced coin is the ad - bc = 0 case of the general closed form
    for (int n = 3; n <= 8; ++n) {
        CHECK(multiset_match(cycle_crw_spectrum_balanced(n),
                             cycle_crw_spectrum(n, CoinParams::balanced()), 1e-12)
                  .pass);
        // and the walk's spectrum really is Spec(T(C_n)) plus n zeros
        CHECK(check_cycle_srw_crosscheck(n).pass);
    }
}

TEST_CASE("uniform crw matrix") {
    const DenseMatrix uc3 = uniform_crw_matrix(cycle_graph(3));
    for (int e = 0; e < 6; ++e) {
        Complex row = 0.0;
        for (int f = 0; f < 6; ++f) {
            CHECK((uc3(e, f) == Complex(0.0, 0.0) || uc3(e, f) == Complex(0.5, 0.0)));
            row += uc3(e, f);
        }
        CHECK(std::abs(row - 1.0) <= 1e-15);
    }

    const DenseMatrix uk4 = uniform_crw_matrix(complete_graph(4));
    for (int e = 0; e < 12; ++e)
        for (int f = 0; f < 12; ++f)
            CHECK((uk4(e, f) == Complex(0.0, 0.0) ||
                   std::abs(uk4(e, f).real() - 1.0 / 3.0) < 1e-15));

    const DenseMatrix upet = uniform_crw_matrix(petersen_graph());
    REQUIRE(upet.rows() == 30);
    for (int e = 0; e < 30; ++e) {
        Complex row = 0.0;
        for (int f = 0; f < 30; ++f) row += upet(e, f);
        CHECK(std::abs(row - 1.0) <= 1e-14);
    }

    CHECK_THROWS_AS(uniform_crw_matrix(complete_bipartite_graph(2, 3)), std::invalid_argument);
}

TEST_CASE("uniform crw charpoly identity") {
    const Graph k4 = complete_graph(4);

    // lambda = 1: both sides vanish (row-stochastic matrices have eigenvalue 1)
    const IdentitySides at1 = uniform_crw_charpoly_identity(k4, Complex(1.0, 0.0));
    CHECK(std::abs(at1.lhs) <= 1e-12);
    CHECK(std::abs(at1.rhs) <= 1e-12);

    // lambda = 0 with 2m > n: the lambda^{2m-n} factor kills both sides
    const IdentitySides at0 = uniform_crw_charpoly_identity(k4, Complex(0.0, 0.0));
    CHECK(std::abs(at0.lhs) <= 1e-12);
    CHECK(std::abs(at0.rhs) <= 1e-12);

    CHECK(relative_deviation(uniform_crw_charpoly_identity(k4, Complex(0.5, 0.0))) <= 1e-9);

    CHECK_THROWS_AS(uniform_crw_charpoly_identity(parse_edge_list("4 3\n1 2\n1 3\n1 4"),
                                                  Complex(0.5, 0.0)),
                    std::invalid_argument);

    for (const Graph& g : standard_family(42)) {
        const auto d = g.regular_degree();
        if (!d || *d < 2) continue;
        const VerificationReport r = check_uniform_crw_charpoly(g, 42);
        INFO(g.label() << " max dev " << r.max_rel_dev);
        CHECK(r.pass);
        CHECK(r.samples.size() >= 2 * static_cast<std::size_t>(g.arc_count()) + 1);
    }
}

TEST_CASE("uniform crw closed-form spectrum") {
    // K4: Spec(A)/3 plus 2m - n = 8 zeros
    const Spectrum k4 = uniform_crw_spectrum(complete_graph(4));
    std::vector<Complex> expected = {{1.0, 0.0}, {-1.0 / 3.0, 0.0}, {-1.0 / 3.0, 0.0},
                                     {-1.0 / 3.0, 0.0}};
    for (int k = 0; k < 8; ++k) expected.emplace_back(0.0, 0.0);
    CHECK(multiset_match(k4, Spectrum{expected, Provenance::closed_form, "by hand"}, 1e-12).pass);
    CHECK(multiset_match(k4, oracle_spectrum(uniform_crw_matrix(complete_graph(4)), "oracle"), 1e-8)
              .pass);

    // cycles: the multiset coincides with the balanced-coin closed form
    for (int n : {3, 6}) {
        CHECK(multiset_match(uniform_crw_spectrum(cycle_graph(n)), cycle_crw_spectrum_balanced(n),
                             1e-10)
                  .pass);
    }

    // Petersen: {1, 1/3 x5, -2/3 x4} plus 20 zeros
    const Spectrum pet = uniform_crw_spectrum(petersen_graph());
    std::vector<Complex> expected_pet = {{1.0, 0.0}};
    for (int k = 0; k < 5; ++k) expected_pet.emplace_back(1.0 / 3.0, 0.0);
    for (int k = 0; k < 4; ++k) expected_pet.emplace_back(-2.0 / 3.0, 0.0);
    for (int k = 0; k < 20; ++k) expected_pet.emplace_back(0.0, 0.0);
    CHECK(multiset_match(pet, Spectrum{expected_pet, Provenance::closed_form, "by hand"}, 1e-10)
              .pass);
    CHECK(multiset_match(pet, oracle_spectrum(uniform_crw_matrix(petersen_graph()), "oracle"), 1e-8)
              .pass);

    for (const Graph& g : standard_family(42)) {
        const auto d = g.regular_degree();
        if (!d || *d < 2) continue;
        INFO(g.label());
        CHECK(check_uniform_crw_spectrum(g).pass);
    }
}
