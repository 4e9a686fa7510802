#pragma once

#include "arrmorse/arrangement.hpp"
#include "arrmorse/lattice.hpp"

#include <vector>

namespace arrmorse {

/// Connected component of R^n minus the real hyperplanes, keyed by its
/// sign vector.
struct Chamber {
    std::vector<int> signs;     // +1 / -1 per hyperplane
    bool bounded = false;
    RealVector interior_point;  // best sampled interior point
    double clearance = 0.0;     // min_i |xi_i| / ||a_i|| at interior_point
};

struct ChamberOptions {
    int grid_per_dim = 48;
    int ring_directions = 96;   // per vertex and radius
    unsigned seed = 2026;
};

/// Enumerates chambers of a real essential arrangement by sign-vector
/// sampling (vertex-box grid, rings around vertices, perturbed vertex-pair
/// midpoints). Throws DimensionMismatch for non-real data and NotEssential
/// when the lattice rank is below the ambient dimension.
std::vector<Chamber> enumerate_chambers(const Arrangement& arr, const Lattice& lat,
                                        const ChamberOptions& opts = {});

int bounded_chamber_count(const Arrangement& arr, const Lattice& lat,
                          const ChamberOptions& opts = {});

/// Sign vector of a real point; entries 0 mark on-hyperplane coordinates.
std::vector<int> sign_vector(const Arrangement& arr, const RealVector& x, double tol);

}  // namespace arrmorse
