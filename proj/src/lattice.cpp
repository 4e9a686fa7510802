#include "arrmorse/lattice.hpp"

#include "arrmorse/exact.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <set>

namespace arrmorse {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Particular solution and orthonormal direction basis for the flat defined
// by the (consistent) system {xi_i = 0 : i in S}.
void flat_geometry(const Arrangement& arr, const std::vector<int>& S, int codim,
                   ComplexVector& point, ComplexMatrix& direction) {
    const int n = arr.ambient_dim();
    if (S.empty()) {
        point = ComplexVector::Zero(n);
        direction = ComplexMatrix::Identity(n, n);
        return;
    }
    const int r = static_cast<int>(S.size());
    ComplexMatrix A(r, n);
    ComplexVector b(r);
    for (int row = 0; row < r; ++row) {
        const Hyperplane& h = arr.hyperplane(S[static_cast<std::size_t>(row)]);
        A.row(row) = h.linear_part.transpose();
        b(row) = -h.offset;
    }
    point = A.completeOrthogonalDecomposition().solve(b);
    // Kernel of A from the right singular vectors of the small singular values.
    Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullV);
    direction = svd.matrixV().rightCols(n - codim);
}

}  // namespace

Lattice::Lattice(int ambient_dim, int num_hyperplanes, bool exact, std::vector<Flat> flats,
                 std::vector<std::pair<int, int>> covers)
    : ambient_dim_(ambient_dim),
      num_hyperplanes_(num_hyperplanes),
      exact_(exact),
      flats_(std::move(flats)),
      covers_(std::move(covers)) {}

bool Lattice::contains(int i, int j) const {
    return subset_of(flats_[static_cast<std::size_t>(i)].generators,
                     flats_[static_cast<std::size_t>(j)].generators);
}

std::vector<int> Lattice::flats_of_codim(int k) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        if (flats_[i].codim == k) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<ComplexVector> Lattice::vertices() const {
    std::vector<ComplexVector> pts;
    for (const Flat& f : flats_) {
        if (f.codim == ambient_dim_) pts.push_back(f.point);
    }
    return pts;
}

std::vector<long long> Lattice::absolute_moebius_per_codim() const {
    std::vector<long long> dims(static_cast<std::size_t>(arrangement_rank(*this)) + 1, 0);
    for (const Flat& f : flats_) {
        dims[static_cast<std::size_t>(f.codim)] += std::llabs(f.moebius);
    }
    return dims;
}

Lattice build_lattice(const Arrangement& arr, const LatticeOptions& opts) {
    const bool exact = opts.mode != LatticeOptions::Mode::Floating;
    SubsetRankOracle oracle(arr, exact, opts.tol);
    const int m = arr.size();

    // Closure of a candidate generating set: every index whose hyperplane
    // contains the flat, i.e. adding it changes neither rank nor solvability.
    auto closure_of = [&](const std::vector<int>& S, int codim) {
        std::vector<int> closed;
        for (int i = 0; i < m; ++i) {
            std::vector<int> ext = S;
            ext.push_back(i);
            if (oracle.central(ext) && oracle.linear_rank(ext) == codim) closed.push_back(i);
        }
        std::sort(closed.begin(), closed.end());
        return closed;
    };

    std::vector<Flat> flats;
    std::set<std::vector<int>> seen;

    Flat bottom;
    bottom.generators = {};  // nothing contains all of C^n
    bottom.codim = 0;
    flats.push_back(bottom);
    seen.insert(flats[0].generators);

    std::vector<std::vector<int>> frontier = {flats[0].generators};
    for (int codim = 1; codim <= arr.ambient_dim() && !frontier.empty(); ++codim) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& gens : frontier) {
            for (int j = 0; j < m; ++j) {
                if (std::binary_search(gens.begin(), gens.end(), j)) continue;
                std::vector<int> S = gens;
                S.push_back(j);
                if (!oracle.central(S)) continue;
                const std::vector<int> closed = closure_of(S, codim);
                if (seen.insert(closed).second) {
                    Flat f;
                    f.generators = closed;
                    f.codim = codim;
                    flats.push_back(std::move(f));
                    next.push_back(flats.back().generators);
                }
            }
        }
        frontier = std::move(next);
    }

    std::stable_sort(flats.begin(), flats.end(),
                     [](const Flat& a, const Flat& b) { return a.codim < b.codim; });

    for (Flat& f : flats) {
        flat_geometry(arr, f.generators, f.codim, f.point, f.direction);
    }

    // Moebius by top-down recursion over strictly coarser flats.
    for (std::size_t i = 0; i < flats.size(); ++i) {
        if (flats[i].codim == 0) {
            flats[i].moebius = 1;
            continue;
        }
        long long acc = 0;
        for (std::size_t j = 0; j < flats.size(); ++j) {
            if (j == i) continue;
            if (subset_of(flats[j].generators, flats[i].generators)) acc += flats[j].moebius;
        }
        flats[i].moebius = -acc;
    }

    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < flats.size(); ++i) {
        for (std::size_t j = 0; j < flats.size(); ++j) {
            if (flats[j].codim == flats[i].codim + 1 &&
                subset_of(flats[i].generators, flats[j].generators)) {
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }

    return Lattice(arr.ambient_dim(), m, exact, std::move(flats), std::move(covers));
}

long long euler_characteristic(const Lattice& lat) {
    long long chi = 0;
    for (const Flat& f : lat.flats()) chi += f.moebius;
    return chi;
}

int arrangement_rank(const Lattice& lat) {
    int r = 0;
    for (const Flat& f : lat.flats()) r = std::max(r, f.codim);
    return r;
}

bool is_central(const Lattice& lat) {
    for (const Flat& f : lat.flats()) {
        if (static_cast<int>(f.generators.size()) == lat.num_hyperplanes()) return true;
    }
    return false;
}

Essentialization essentialize(const Arrangement& arr) {
    const int n = arr.ambient_dim();
    const int m = arr.size();

    // Rank of the linear parts equals the lattice rank: any subfamily with
    // independent linear parts has a common point.
    ComplexMatrix conj_rows(n, m);
    for (int i = 0; i < m; ++i) conj_rows.col(i) = arr.hyperplane(i).linear_part.conjugate();
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(conj_rows);
    qr.setThreshold(1e-12);
    const int l = static_cast<int>(qr.rank());

    if (l == n) {
        Essentialization out{arr, n, l, ComplexMatrix::Identity(n, n), true};
        return out;
    }

    // Orthonormal basis of span{conj(a_i)}, the Hermitian complement of the
    // common direction space; restricting to it preserves every xi_i.
    const ComplexMatrix Q_full =
        qr.householderQ() * ComplexMatrix::Identity(n, l);

    std::vector<Hyperplane> reduced;
    reduced.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Hyperplane h;
        h.linear_part = (arr.hyperplane(i).linear_part.transpose() * Q_full).transpose();
        h.offset = arr.hyperplane(i).offset;
        reduced.push_back(std::move(h));
    }
    Essentialization out{Arrangement(l, std::move(reduced)), n, l, Q_full, false};
    return out;
}

}  // namespace arrmorse
