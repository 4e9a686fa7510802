#include "arrmorse/exact.hpp"

#include <Eigen/QR>

#include <algorithm>

namespace arrmorse {

int gaussian_rank(std::vector<std::vector<GaussianRational>> rows) {
    return exact_row_reduce(rows);
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    std::vector<std::vector<RationalField>> wrapped;
    wrapped.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<RationalField> w;
        w.reserve(r.size());
        for (auto& x : r) w.emplace_back(std::move(x));
        wrapped.push_back(std::move(w));
    }
    return exact_row_reduce(wrapped);
}

SubsetRankOracle::SubsetRankOracle(const Arrangement& arr, bool exact, double tol)
    : arr_(&arr), exact_(exact), tol_(tol) {}

std::pair<int, int> SubsetRankOracle::ranks(const std::vector<int>& S) const {
    std::vector<int> key = S;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int n = arr_->ambient_dim();
    std::pair<int, int> result;
    if (key.empty()) {
        result = {0, 0};
    } else if (exact_) {
        std::vector<std::vector<GaussianRational>> lin, aug;
        for (int i : key) {
            const Hyperplane& h = arr_->hyperplane(i);
            std::vector<GaussianRational> row;
            row.reserve(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k < n; ++k) row.push_back(GaussianRational::from(h.linear_part(k)));
            lin.push_back(row);
            row.push_back(GaussianRational::from(-h.offset));
            aug.push_back(std::move(row));
        }
        result = {gaussian_rank(std::move(lin)), gaussian_rank(std::move(aug))};
    } else {
        const int r = static_cast<int>(key.size());
        ComplexMatrix lin(r, n), aug(r, n + 1);
        for (int row = 0; row < r; ++row) {
            const Hyperplane& h = arr_->hyperplane(key[static_cast<std::size_t>(row)]);
            lin.row(row) = h.linear_part.transpose();
            aug.row(row).head(n) = h.linear_part.transpose();
            aug(row, n) = -h.offset;
        }
        Eigen::ColPivHouseholderQR<ComplexMatrix> qr_lin(lin), qr_aug(aug);
        qr_lin.setThreshold(tol_);
        qr_aug.setThreshold(tol_);
        result = {static_cast<int>(qr_lin.rank()), static_cast<int>(qr_aug.rank())};
    }
    cache_.emplace(std::move(key), result);
    return result;
}

int SubsetRankOracle::linear_rank(const std::vector<int>& S) const { return ranks(S).first; }

bool SubsetRankOracle::central(const std::vector<int>& S) const {
    const auto [lin, aug] = ranks(S);
    return lin == aug;
}

bool SubsetRankOracle::independent(const std::vector<int>& S) const {
    return central(S) && linear_rank(S) == static_cast<int>(S.size());
}

}  // namespace arrmorse
