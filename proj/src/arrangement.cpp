#include "arrmorse/arrangement.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace arrmorse {

namespace {

using nlohmann::json;

// Proportionality of (a, c) pairs via the Cauchy-Schwarz equality case.
bool proportional(const Hyperplane& h1, const Hyperplane& h2, int n) {
    ComplexVector v1(n + 1), v2(n + 1);
    v1.head(n) = h1.linear_part;
    v1(n) = h1.offset;
    v2.head(n) = h2.linear_part;
    v2(n) = h2.offset;
    const double lhs = std::abs(v1.dot(v2));  // conjugating dot
    const double rhs = v1.norm() * v2.norm();
    return lhs >= rhs * (1.0 - 1e-12);
}

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string("expected [re, im] pair for ") + what);
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

Arrangement::Arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes)
    : ambient_dim_(ambient_dim), hyperplanes_(std::move(hyperplanes)) {
    if (ambient_dim_ < 1) throw ParseError("ambient_dim must be >= 1");
    if (hyperplanes_.empty()) throw ParseError("arrangement needs at least one hyperplane");
    const int n = ambient_dim_;
    const int m = static_cast<int>(hyperplanes_.size());
    for (int i = 0; i < m; ++i) {
        const Hyperplane& h = hyperplanes_[i];
        if (h.linear_part.size() != n) {
            throw DimensionMismatch("hyperplane " + std::to_string(i) +
                                    " has linear part of length " +
                                    std::to_string(h.linear_part.size()) +
                                    ", expected " + std::to_string(n));
        }
        if (h.linear_part.norm() == 0.0) {
            throw ZeroLinearPart("hyperplane " + std::to_string(i) +
                                 " has zero linear part");
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (proportional(hyperplanes_[i], hyperplanes_[j], n)) {
                throw DuplicateHyperplane("hyperplanes " + std::to_string(i) +
                                          " and " + std::to_string(j) +
                                          " define the same zero set");
            }
        }
    }
    coeff_.resize(m, n);
    offs_.resize(m);
    for (int i = 0; i < m; ++i) {
        coeff_.row(i) = hyperplanes_[i].linear_part.transpose();
        offs_(i) = hyperplanes_[i].offset;
    }
}

const Hyperplane& Arrangement::hyperplane(int i) const {
    if (i < 0 || i >= size()) {
        throw IndexOutOfRange("hyperplane index " + std::to_string(i) +
                              " out of range [0, " + std::to_string(size()) + ")");
    }
    return hyperplanes_[static_cast<std::size_t>(i)];
}

bool Arrangement::real_data(double tol) const {
    for (const Hyperplane& h : hyperplanes_) {
        for (int k = 0; k < h.linear_part.size(); ++k) {
            if (std::abs(h.linear_part(k).imag()) > tol) return false;
        }
        if (std::abs(h.offset.imag()) > tol) return false;
    }
    return true;
}

Weights::Weights(std::vector<double> values, std::vector<std::optional<Rational>> exact)
    : values_(std::move(values)), exact_(std::move(exact)) {
    if (values_.empty()) throw ParseError("weight vector must be non-empty");
    if (exact_.size() != values_.size()) {
        throw LengthMismatch("exact-weight list length does not match value list");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ParseError("weight " + std::to_string(i) + " is not finite");
        }
        if (exact_[i] && to_double(*exact_[i]) != values_[i]) {
            // Exact value is authoritative if the two drift apart.
            values_[i] = to_double(*exact_[i]);
        }
    }
}

Weights Weights::from_doubles(std::vector<double> values) {
    std::vector<std::optional<Rational>> exact(values.size(), std::nullopt);
    return Weights(std::move(values), std::move(exact));
}

Weights Weights::from_rationals(const std::vector<Rational>& values) {
    std::vector<double> vals;
    std::vector<std::optional<Rational>> exact;
    vals.reserve(values.size());
    exact.reserve(values.size());
    for (const Rational& r : values) {
        vals.push_back(to_double(r));
        exact.emplace_back(r);
    }
    return Weights(std::move(vals), std::move(exact));
}

Weights Weights::ones(int m) {
    return from_rationals(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

double Weights::value(int i) const {
    if (i < 0 || i >= size()) throw IndexOutOfRange("weight index out of range");
    return values_[static_cast<std::size_t>(i)];
}

const std::optional<Rational>& Weights::exact(int i) const {
    if (i < 0 || i >= size()) throw IndexOutOfRange("weight index out of range");
    return exact_[static_cast<std::size_t>(i)];
}

bool Weights::all_rational() const {
    for (const auto& e : exact_) {
        if (!e) return false;
    }
    return true;
}

bool Weights::all_positive() const {
    for (double v : values_) {
        if (!(v > 0.0)) return false;
    }
    return true;
}

double Weights::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

double Weights::norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

Complex evaluate_xi(const Arrangement& arr, int i, const ComplexVector& z) {
    if (z.size() != arr.ambient_dim()) {
        throw DimensionMismatch("point has length " + std::to_string(z.size()) +
                                ", expected " + std::to_string(arr.ambient_dim()));
    }
    return arr.hyperplane(i).evaluate(z);
}

double distance_to_hyperplane(const Arrangement& arr, int i, const ComplexVector& z) {
    return std::abs(evaluate_xi(arr, i, z)) / arr.hyperplane(i).linear_norm();
}

double distance_to_arrangement(const Arrangement& arr, const ComplexVector& z) {
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < arr.size(); ++i) {
        d = std::min(d, distance_to_hyperplane(arr, i, z));
    }
    return d;
}

double log_f_alpha(const Arrangement& arr, const Weights& w, const ComplexVector& z) {
    if (w.size() != arr.size()) {
        throw LengthMismatch("weight vector length " + std::to_string(w.size()) +
                             " does not match m = " + std::to_string(arr.size()));
    }
    double acc = 0.0;
    for (int i = 0; i < arr.size(); ++i) {
        const double mag = std::abs(evaluate_xi(arr, i, z));
        if (mag < kOnHyperplaneThreshold) {
            throw PointOnArrangement("point lies on hyperplane " + std::to_string(i));
        }
        acc += w.value(i) * std::log(mag);
    }
    return acc;
}

std::pair<Arrangement, Weights> parse_arrangement(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer()) {
        throw ParseError("missing integer field 'ambient_dim'");
    }
    const int n = doc["ambient_dim"].get<int>();
    if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
        throw ParseError("missing array field 'hyperplanes'");
    }

    std::vector<Hyperplane> planes;
    for (const json& hj : doc["hyperplanes"]) {
        if (!hj.is_object() || !hj.contains("a") || !hj.contains("c")) {
            throw ParseError("each hyperplane needs fields 'a' and 'c'");
        }
        const json& aj = hj["a"];
        if (!aj.is_array()) throw ParseError("hyperplane field 'a' must be an array");
        Hyperplane h;
        h.linear_part.resize(static_cast<Eigen::Index>(aj.size()));
        for (std::size_t k = 0; k < aj.size(); ++k) {
            h.linear_part(static_cast<Eigen::Index>(k)) = complex_from_json(aj[k], "a entry");
        }
        h.offset = complex_from_json(hj["c"], "c");
        planes.push_back(std::move(h));
    }

    if (!doc.contains("weights") || !doc["weights"].is_array()) {
        throw ParseError("missing array field 'weights'");
    }
    std::vector<double> values;
    std::vector<std::optional<Rational>> exact;
    for (const json& wj : doc["weights"]) {
        if (wj.is_string()) {
            auto r = parse_rational(wj.get<std::string>());
            if (!r) throw ParseError("weight string '" + wj.get<std::string>() +
                                     "' is not a rational p/q");
            values.push_back(to_double(*r));
            exact.emplace_back(*r);
        } else if (wj.is_number()) {
            values.push_back(wj.get<double>());
            exact.emplace_back(std::nullopt);
        } else {
            throw ParseError("weights must be rational strings or numbers");
        }
    }
    if (values.size() != planes.size()) {
        throw LengthMismatch("weight list has length " + std::to_string(values.size()) +
                             ", expected m = " + std::to_string(planes.size()));
    }

    Arrangement arr(n, std::move(planes));
    Weights w(std::move(values), std::move(exact));
    return {std::move(arr), std::move(w)};
}

std::string serialize_arrangement(const Arrangement& arr, const Weights& w, bool pretty) {
    json doc;
    doc["ambient_dim"] = arr.ambient_dim();
    json planes = json::array();
    for (const Hyperplane& h : arr.hyperplanes()) {
        json a = json::array();
        for (int k = 0; k < h.linear_part.size(); ++k) a.push_back(complex_to_json(h.linear_part(k)));
        planes.push_back(json{{"a", a}, {"c", complex_to_json(h.offset)}});
    }
    doc["hyperplanes"] = planes;
    json weights = json::array();
    for (int i = 0; i < w.size(); ++i) {
        if (w.exact(i)) {
            weights.push_back(format_rational(*w.exact(i)));
        } else {
            weights.push_back(w.value(i));
        }
    }
    doc["weights"] = weights;
    return pretty ? doc.dump(2) : doc.dump();
}

std::pair<Arrangement, Weights> load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_arrangement(ss.str());
}

}  // namespace arrmorse
