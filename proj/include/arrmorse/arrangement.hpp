#pragma once

#include "arrmorse/errors.hpp"
#include "arrmorse/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrmorse {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Points with |xi_i(z)| below this are treated as lying on the arrangement.
inline constexpr double kOnHyperplaneThreshold = 1e-300;

/// Affine functional xi(z) = a . z + c on C^n; the hyperplane is Ker xi.
struct Hyperplane {
    ComplexVector linear_part;  // a; never the zero vector
    Complex offset{0.0, 0.0};   // c

    Complex evaluate(const ComplexVector& z) const {
        // Plain bilinear pairing a . z (no conjugation).
        return linear_part.cwiseProduct(z).sum() + offset;
    }
    double linear_norm() const { return linear_part.norm(); }
};

/// An ordered list of pairwise distinct hyperplanes in C^n.
///
/// Immutable after construction; the constructor enforces nonzero linear
/// parts and rejects proportional (a, c) pairs (same zero set).
class Arrangement {
public:
    Arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes);

    int ambient_dim() const { return ambient_dim_; }
    int size() const { return static_cast<int>(hyperplanes_.size()); }
    const Hyperplane& hyperplane(int i) const;
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

    /// m x n matrix whose rows are the linear parts.
    const ComplexMatrix& coefficient_matrix() const { return coeff_; }
    /// Length-m vector of offsets.
    const ComplexVector& offsets() const { return offs_; }

    /// True when every coefficient has zero imaginary part (within tol).
    bool real_data(double tol = 0.0) const;

private:
    int ambient_dim_;
    std::vector<Hyperplane> hyperplanes_;
    ComplexMatrix coeff_;
    ComplexVector offs_;
};

/// Real weight vector alpha. Entries supplied as rational strings are kept
/// exact alongside their double value; floats carry no exact form.
class Weights {
public:
    Weights(std::vector<double> values,
            std::vector<std::optional<Rational>> exact);

    static Weights from_doubles(std::vector<double> values);
    static Weights from_rationals(const std::vector<Rational>& values);
    /// Convenience: all entries set to 1 (exact).
    static Weights ones(int m);

    int size() const { return static_cast<int>(values_.size()); }
    double value(int i) const;
    const std::vector<double>& values() const { return values_; }
    const std::optional<Rational>& exact(int i) const;

    bool all_rational() const;
    bool all_positive() const;
    double sum() const;
    double norm() const;

private:
    std::vector<double> values_;
    std::vector<std::optional<Rational>> exact_;
};

/// xi_i(z) = a_i . z + c_i. Throws IndexOutOfRange / DimensionMismatch.
Complex evaluate_xi(const Arrangement& arr, int i, const ComplexVector& z);

/// Distance from z to hyperplane i, |xi_i(z)| / ||a_i||.
double distance_to_hyperplane(const Arrangement& arr, int i, const ComplexVector& z);
/// min_i distance_to_hyperplane(arr, i, z).
double distance_to_arrangement(const Arrangement& arr, const ComplexVector& z);

/// log f_alpha(z) = sum_i alpha_i log|xi_i(z)|, computed in log space.
/// Throws PointOnArrangement when some |xi_i(z)| is below the threshold.
double log_f_alpha(const Arrangement& arr, const Weights& w, const ComplexVector& z);

/// Parses the JSON arrangement format:
///   {"ambient_dim": n,
///    "hyperplanes": [{"a": [[re,im],...], "c": [re,im]}, ...],
///    "weights": ["1", "2/3", 0.5, ...]}
std::pair<Arrangement, Weights> parse_arrangement(const std::string& text);

/// Inverse of parse_arrangement on the canonical form (rationals as strings,
/// floats as numbers). parse(serialize(x)) == x.
std::string serialize_arrangement(const Arrangement& arr, const Weights& w,
                                  bool pretty = false);

std::pair<Arrangement, Weights> load_arrangement_file(const std::string& path);

}  // namespace arrmorse
