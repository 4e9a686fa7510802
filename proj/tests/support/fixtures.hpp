#pragma once

#include "arrmorse/arrangement.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace arrmorse::testing {

struct Fixture {
    std::string name;
    Arrangement arr;
    Weights weights;
};

// One-dimensional helpers -------------------------------------------------

/// Hyperplanes z - p_i in C^1 for the given (complex) points.
Arrangement points_arrangement(const std::vector<Complex>& points);

/// m well-separated random real points in C^1 (gap >= 0.3), deterministic in seed.
Arrangement random_points(int m, unsigned seed);

/// Random positive rational weights p/q, p in [1,9], q in [1,4].
Weights random_positive_rational_weights(int m, unsigned seed);

// Two- and three-dimensional fixtures --------------------------------------

/// {z, z-1} in C^1.
Fixture two_points();

/// m pairwise non-parallel real lines in C^2 with no triple point
/// (checked generically by construction: distinct directions, offsets on a curve).
Arrangement generic_lines(int m);

/// Central essential: the coordinate lines {z1, z2} in C^2.
Fixture central_two_lines();

/// Central essential: {z1, z2, z1+z2} concurrent at the origin.
Fixture concurrent_three_lines();

/// Affine with a parallel pair: {z1, z1-1, z2} in C^2.
Fixture parallel_plus_transversal();

/// Braid-type {z1-z2, z2-z3, z1-z3} in C^3: rank 2, central, not essential.
Fixture braid_three();

/// {z1-z2, z2-z3, z1-z3-1} in C^3: rank 2, not central.
Fixture affine_braid_three();

/// Points {0, 1, i} in C^1: smallest arrangement with non-real data.
Fixture complex_points();

/// The identity-suite collection (at least six arrangements).
std::vector<Fixture> identity_suite();

// Random off-arrangement points --------------------------------------------

/// Samples z in the complex ball of the given radius around center with
/// distance_to_arrangement(z) >= min_dist.
ComplexVector random_point_off_arrangement(const Arrangement& arr, std::mt19937_64& rng,
                                           double radius, double min_dist,
                                           const ComplexVector& center);

/// Same with a default box derived from the coefficient scale.
ComplexVector random_point_off_arrangement(const Arrangement& arr, std::mt19937_64& rng);

}  // namespace arrmorse::testing
