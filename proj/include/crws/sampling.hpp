#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/rng.hpp"

namespace crws {

/// Where identity sample points live relative to the unit circle.
///  - unit_disk: |u| <= 0.9, for det(I - uM) forms whose zeros satisfy
///    |u| >= 1 (stochastic M);
///  - outside_disk: |lambda| in [1.2, 2], for det(lambda I - M) forms with
///    Spec(M) inside the closed unit disk;
///  - split_annulus: |lambda| <= 0.7 or in [1.3, 2], for unitary M whose
///    spectrum lies exactly on the circle.
enum class SampleDomain { unit_disk, outside_disk, split_annulus };

/// Deterministic sample points for a polynomial identity check: a fixed real
/// prefix, then seeded complex draws. Every candidate must pass `admissible`
/// (pole guards plus any lhs-magnitude guard); inadmissible fixed points are
/// skipped, inadmissible draws are rejected and redrawn.
inline std::vector<Complex> draw_sample_points(std::size_t count, SampleDomain domain,
                                               std::mt19937_64& rng,
                                               const std::function<bool(Complex)>& admissible) {
    static const std::vector<double> disk_reals = {0.85, -0.85, 0.6, -0.6, 0.3, -0.3, 0.1, -0.1};
    static const std::vector<double> outer_reals = {2.0, -2.0, 1.5, -1.5, 1.35, -1.35, 1.2, -1.2};
    static const std::vector<double> split_reals = {2.0, -2.0, 1.5, -1.5, 0.5, -0.5, 0.3, -0.3};

    const std::vector<double>* reals = &disk_reals;
    if (domain == SampleDomain::outside_disk) reals = &outer_reals;
    if (domain == SampleDomain::split_annulus) reals = &split_reals;

    std::vector<Complex> points;
    points.reserve(count);
    for (double x : *reals) {
        if (points.size() == count) break;
        const Complex z(x, 0.0);
        if (admissible(z)) points.push_back(z);
    }

    std::size_t draw_index = 0;
    long attempts = 0;
    while (points.size() < count) {
        if (++attempts > 10000)
            throw std::runtime_error("draw_sample_points: admissible region too small");
        double modulus = 0.0;
        switch (domain) {
            case SampleDomain::unit_disk:
                modulus = uniform_real(rng, 0.15, 0.9);
                break;
            case SampleDomain::outside_disk:
                modulus = uniform_real(rng, 1.2, 2.0);
                break;
            case SampleDomain::split_annulus:
                modulus = (draw_index % 2 == 0) ? uniform_real(rng, 0.15, 0.7)
                                                : uniform_real(rng, 1.3, 2.0);
                break;
        }
        const double angle = uniform_real(rng, 0.0, 6.283185307179586);
        const Complex z = std::polar(modulus, angle);
        ++draw_index;
        if (!admissible(z)) continue;
        points.push_back(z);
    }
    return points;
}

}  // namespace crws
