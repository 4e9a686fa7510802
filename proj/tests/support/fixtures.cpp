#include "support/fixtures.hpp"

#include <algorithm>
#include <cmath>

namespace arrmorse::testing {

namespace {

Hyperplane line(double ax, double ay, double c) {
    Hyperplane h;
    h.linear_part.resize(2);
    h.linear_part << Complex(ax, 0), Complex(ay, 0);
    h.offset = Complex(c, 0);
    return h;
}

Hyperplane plane3(double a1, double a2, double a3, double c) {
    Hyperplane h;
    h.linear_part.resize(3);
    h.linear_part << Complex(a1, 0), Complex(a2, 0), Complex(a3, 0);
    h.offset = Complex(c, 0);
    return h;
}

}  // namespace

Arrangement points_arrangement(const std::vector<Complex>& points) {
    std::vector<Hyperplane> planes;
    for (const Complex& p : points) {
        Hyperplane h;
        h.linear_part.resize(1);
        h.linear_part << Complex(1, 0);
        h.offset = -p;
        planes.push_back(std::move(h));
    }
    return Arrangement(1, std::move(planes));
}

Arrangement random_points(int m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < m) {
        const double p = uni(rng);
        bool ok = true;
        for (const Complex& q : pts) {
            if (std::abs(p - q.real()) < 0.3) ok = false;
        }
        if (ok) pts.emplace_back(p, 0.0);
    }
    return points_arrangement(pts);
}

Weights random_positive_rational_weights(int m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    std::vector<Rational> vals;
    for (int i = 0; i < m; ++i) vals.emplace_back(num(rng), den(rng));
    return Weights::from_rationals(vals);
}

Fixture two_points() {
    return {"two_points_C1", points_arrangement({Complex(0, 0), Complex(1, 0)}),
            Weights::ones(2)};
}

Arrangement generic_lines(int m) {
    // Normal directions at distinct angles, offsets spread so that no three
    // lines meet: cos(t_j) x + sin(t_j) y = r_j.
    std::vector<Hyperplane> planes;
    for (int j = 0; j < m; ++j) {
        const double t = 0.4 + j * 3.14159265358979323846 / m;
        const double r = 1.0 + 0.37 * j + 0.061 * j * j;
        planes.push_back(line(std::cos(t), std::sin(t), -r));
    }
    return Arrangement(2, std::move(planes));
}

Fixture central_two_lines() {
    std::vector<Hyperplane> planes = {line(1, 0, 0), line(0, 1, 0)};
    return {"central_two_lines_C2", Arrangement(2, std::move(planes)), Weights::ones(2)};
}

Fixture concurrent_three_lines() {
    std::vector<Hyperplane> planes = {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)};
    return {"concurrent_three_lines_C2", Arrangement(2, std::move(planes)), Weights::ones(3)};
}

Fixture parallel_plus_transversal() {
    std::vector<Hyperplane> planes = {line(1, 0, 0), line(1, 0, -1), line(0, 1, 0)};
    return {"parallel_plus_transversal_C2", Arrangement(2, std::move(planes)), Weights::ones(3)};
}

Fixture braid_three() {
    std::vector<Hyperplane> planes = {plane3(1, -1, 0, 0), plane3(0, 1, -1, 0),
                                      plane3(1, 0, -1, 0)};
    return {"braid_three_C3", Arrangement(3, std::move(planes)), Weights::ones(3)};
}

Fixture affine_braid_three() {
    std::vector<Hyperplane> planes = {plane3(1, -1, 0, 0), plane3(0, 1, -1, 0),
                                      plane3(1, 0, -1, -1)};
    return {"affine_braid_three_C3", Arrangement(3, std::move(planes)), Weights::ones(3)};
}

Fixture complex_points() {
    return {"complex_points_C1",
            points_arrangement({Complex(0, 0), Complex(1, 0), Complex(0, 1)}),
            Weights::ones(3)};
}

std::vector<Fixture> identity_suite() {
    std::vector<Fixture> fx;
    fx.push_back(two_points());
    fx.push_back({"four_points_C1", random_points(4, 11), Weights::ones(4)});
    fx.push_back({"generic_lines_3", generic_lines(3), Weights::ones(3)});
    fx.push_back({"generic_lines_5", generic_lines(5), Weights::ones(5)});
    fx.push_back(concurrent_three_lines());
    fx.push_back(parallel_plus_transversal());
    fx.push_back(braid_three());
    fx.push_back(complex_points());
    return fx;
}

ComplexVector random_point_off_arrangement(const Arrangement& arr, std::mt19937_64& rng,
                                           double radius, double min_dist,
                                           const ComplexVector& center) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const int n = arr.ambient_dim();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ComplexVector z(n);
        for (int k = 0; k < n; ++k) z(k) = Complex(uni(rng), uni(rng)) * radius;
        if (z.norm() > radius) continue;
        z += center;
        if (distance_to_arrangement(arr, z) >= min_dist) return z;
    }
    throw std::runtime_error("could not sample a point off the arrangement");
}

ComplexVector random_point_off_arrangement(const Arrangement& arr, std::mt19937_64& rng) {
    ComplexVector center = ComplexVector::Zero(arr.ambient_dim());
    return random_point_off_arrangement(arr, rng, 3.0, 1e-3, center);
}

}  // namespace arrmorse::testing
