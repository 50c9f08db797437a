#include "ranapprox/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ranapprox {

GridEvaluator::GridEvaluator(const LambdaSequence& lambda, std::size_t d,
                             std::span<const MultiIndex> indices, std::size_t points_per_dim,
                             std::size_t budget)
    : d_(d), G_(points_per_dim), count_(indices.size()) {
    if (d_ == 0) throw std::invalid_argument("GridEvaluator: dimension must be >= 1");
    if (G_ == 0) throw std::invalid_argument("GridEvaluator: empty grid");
    for (std::size_t j = 0; j < d_; ++j) {
        if (total_ > budget / G_) {
            throw GridBudgetError("grid of " + std::to_string(G_) + "^" + std::to_string(d_) +
                                  " points exceeds the budget of " + std::to_string(budget) +
                                  "; use random-point evaluation instead");
        }
        total_ *= G_;
    }
    for (const auto& k : indices) {
        if (k.size() != d_) throw std::invalid_argument("GridEvaluator: index length != d");
        for (const int kj : k) k_max_ = std::max(k_max_, kj < 0 ? -kj : kj);
    }
    const std::size_t width = 2 * static_cast<std::size_t>(k_max_) + 1;
    table_.resize(width * G_);
    for (int k = -k_max_; k <= k_max_; ++k) {
        for (std::size_t g = 0; g < G_; ++g) {
            table_[static_cast<std::size_t>(k + k_max_) * G_ + g] =
                eval_basis_1d(lambda, k, static_cast<double>(g) / static_cast<double>(G_));
        }
    }

    const std::size_t plen = d_ - 1;
    std::vector<std::size_t> order(indices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(indices[a].begin(), indices[a].begin() + plen,
                                            indices[b].begin(), indices[b].begin() + plen);
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& k = indices[order[pos]];
        const bool new_group =
            pos == 0 || !std::equal(k.begin(), k.begin() + plen, indices[order[pos - 1]].begin());
        if (new_group) {
            prefixes_.insert(prefixes_.end(), k.begin(), k.begin() + plen);
            group_start_.push_back(member_last_.size());
        }
        member_last_.push_back(k[plen]);
        member_slot_.push_back(order[pos]);
    }
    group_start_.push_back(member_last_.size());
}

template <class Visit>
void GridEvaluator::sweep(std::span<const double> coefs, Visit&& visit) const {
    if (coefs.size() != count_) throw std::invalid_argument("GridEvaluator: coefficient count mismatch");
    const std::size_t groups = group_start_.empty() ? 0 : group_start_.size() - 1;
    const std::size_t plen = d_ - 1;
    // line sums along the last axis, one row of G values per group
    std::vector<double> lines(groups * G_, 0.0);
    for (std::size_t grp = 0; grp < groups; ++grp) {
        double* row = lines.data() + grp * G_;
        for (std::size_t m = group_start_[grp]; m < group_start_[grp + 1]; ++m) {
            const double c = coefs[member_slot_[m]];
            if (c == 0.0) continue;
            const double* basis = table_.data() + static_cast<std::size_t>(member_last_[m] + k_max_) * G_;
            for (std::size_t g = 0; g < G_; ++g) row[g] += c * basis[g];
        }
    }
    const std::size_t outer_total = total_ / G_;
    std::vector<std::size_t> outer(plen, 0);
    std::vector<double> acc(G_);
    for (std::size_t flat = 0; flat < outer_total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t j = plen; j-- > 0;) {
            outer[j] = rest % G_;
            rest /= G_;
        }
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t grp = 0; grp < groups; ++grp) {
            double w = 1.0;
            for (std::size_t j = 0; j < plen; ++j) w *= table(prefixes_[grp * plen + j], outer[j]);
            if (w == 0.0) continue;
            const double* row = lines.data() + grp * G_;
            for (std::size_t g = 0; g < G_; ++g) acc[g] += w * row[g];
        }
        visit(flat * G_, acc);
    }
}

double GridEvaluator::max_abs(std::span<const double> coefs) const {
    double best = 0.0;
    sweep(coefs, [&best](std::size_t, const std::vector<double>& acc) {
        for (const double v : acc) best = std::max(best, std::abs(v));
    });
    return best;
}

std::vector<double> GridEvaluator::values(std::span<const double> coefs) const {
    std::vector<double> out(total_);
    sweep(coefs, [&out](std::size_t offset, const std::vector<double>& acc) {
        std::copy(acc.begin(), acc.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    });
    return out;
}

}  // namespace ranapprox
