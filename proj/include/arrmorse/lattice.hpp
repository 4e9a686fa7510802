#pragma once

#include "arrmorse/arrangement.hpp"

#include <utility>
#include <vector>

namespace arrmorse {

/// A non-empty intersection of hyperplanes together with its combinatorics.
///
/// generators is closed: it lists every hyperplane index containing the flat,
/// so flats compare by subset containment alone.
struct Flat {
    std::vector<int> generators;
    ComplexVector point;       // particular solution of the defining system
    ComplexMatrix direction;   // n x (n - codim) orthonormal basis of the direction space
    int codim = 0;
    long long moebius = 0;
};

struct LatticeOptions {
    enum class Mode { Auto, Exact, Floating };
    Mode mode = Mode::Auto;
    /// Relative rank threshold for floating-point mode.
    double tol = 1e-9;
};

class Lattice {
public:
    Lattice(int ambient_dim, int num_hyperplanes, bool exact,
            std::vector<Flat> flats, std::vector<std::pair<int, int>> covers);

    int ambient_dim() const { return ambient_dim_; }
    int num_hyperplanes() const { return num_hyperplanes_; }
    bool exact_mode() const { return exact_; }

    /// All flats ordered by codimension (bottom first).
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& bottom() const { return flats_.front(); }

    /// True when flats()[i] contains flats()[j] as subspaces (i coarser).
    bool contains(int i, int j) const;

    /// Pairs (i, j) with flats()[i] covered by flats()[j].
    const std::vector<std::pair<int, int>>& cover_relations() const { return covers_; }

    std::vector<int> flats_of_codim(int k) const;

    /// Points of the arrangement: flats of codimension == ambient_dim.
    std::vector<ComplexVector> vertices() const;

    /// Coefficients of sum_X |mu(X)| t^codim, indexed by degree.
    std::vector<long long> absolute_moebius_per_codim() const;

private:
    int ambient_dim_;
    int num_hyperplanes_;
    bool exact_;
    std::vector<Flat> flats_;
    std::vector<std::pair<int, int>> covers_;
};

/// Enumerates all flats by incremental closure and computes the Moebius
/// function by top-down recursion.
Lattice build_lattice(const Arrangement& arr, const LatticeOptions& opts = {});

/// chi(M) = sum_X mu(X), an exact integer.
long long euler_characteristic(const Lattice& lat);

/// Maximal codimension of a flat.
int arrangement_rank(const Lattice& lat);

inline bool is_essential(const Lattice& lat) {
    return arrangement_rank(lat) == lat.ambient_dim();
}

/// Non-empty common intersection of all hyperplanes.
bool is_central(const Lattice& lat);

/// Result of reducing an arrangement to its essential core in C^l.
///
/// The reduction identifies C^l with the orthogonal complement (Hermitian)
/// of the common direction space: to_reduced(z) = basis^H z and
/// to_original(y) = basis y satisfy xi_i(to_original(y)) = xi_reduced_i(y)
/// and xi_reduced_i(to_reduced(z)) = xi_i(z).
struct Essentialization {
    Arrangement arr;
    int original_dim;
    int rank;              // l; arr lives in C^l
    ComplexMatrix basis;   // n x l, orthonormal columns
    bool was_essential;    // true when the input came back unchanged

    ComplexVector to_reduced(const ComplexVector& z) const { return basis.adjoint() * z; }
    ComplexVector to_original(const ComplexVector& y) const { return basis * y; }
};

Essentialization essentialize(const Arrangement& arr);

}  // namespace arrmorse
