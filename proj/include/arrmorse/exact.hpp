#pragma once

#include "arrmorse/arrangement.hpp"
#include "arrmorse/rational.hpp"

#include <map>
#include <vector>

namespace arrmorse {

/// Element of Q(i), the field of Gaussian rationals.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(Rational r) : re(std::move(r)) {}

    /// Exact: every finite double is a dyadic rational.
    static GaussianRational from(const Complex& z) {
        return {Rational(z.real()), Rational(z.imag())};
    }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        const Rational d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// In-place Gauss-Jordan over an exact field; returns the rank.
/// F needs: default construction (zero), ==, +, -, *, /, is_zero().
template <class F>
int exact_row_reduce(std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const F inv_pivot = rows[pivot_row][col];
        for (std::size_t c = col; c < ncols; ++c) {
            rows[pivot_row][c] = rows[pivot_row][c] / inv_pivot;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            const F factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) {
                rows[r][c] = rows[r][c] - factor * rows[pivot_row][c];
            }
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int gaussian_rank(std::vector<std::vector<GaussianRational>> rows);

/// Rational wrapper with is_zero so the template applies.
struct RationalField {
    Rational v{0};
    RationalField() = default;
    RationalField(Rational x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
    bool is_zero() const { return v == 0; }
    friend RationalField operator+(const RationalField& a, const RationalField& b) { return {a.v + b.v}; }
    friend RationalField operator-(const RationalField& a, const RationalField& b) { return {a.v - b.v}; }
    friend RationalField operator*(const RationalField& a, const RationalField& b) { return {a.v * b.v}; }
    friend RationalField operator/(const RationalField& a, const RationalField& b) { return {a.v / b.v}; }
    friend bool operator==(const RationalField& a, const RationalField& b) { return a.v == b.v; }
};

int rational_rank(std::vector<std::vector<Rational>> rows);

/// Answers rank/centrality questions about index subsets of an arrangement,
/// either in exact Gaussian-rational arithmetic or in doubles with a
/// relative rank threshold. Results are cached per subset.
class SubsetRankOracle {
public:
    SubsetRankOracle(const Arrangement& arr, bool exact, double tol = 1e-9);

    /// Rank of the linear parts {a_i : i in S}. For central S this is the
    /// codimension of the flat.
    int linear_rank(const std::vector<int>& S) const;

    /// True when the system {xi_i = 0 : i in S} has a solution.
    bool central(const std::vector<int>& S) const;

    /// Central with codim equal to the subset size.
    bool independent(const std::vector<int>& S) const;

    bool exact_mode() const { return exact_; }

private:
    std::pair<int, int> ranks(const std::vector<int>& S) const;  // (linear, augmented)

    const Arrangement* arr_;
    bool exact_;
    double tol_;
    mutable std::map<std::vector<int>, std::pair<int, int>> cache_;
};

}  // namespace arrmorse
