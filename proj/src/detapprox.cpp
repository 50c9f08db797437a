#include "ranapprox/detapprox.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ranapprox {

bool key_less(std::span<const int> a, std::span<const int> b) noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) {
        return frequency_key(x) < frequency_key(y);
    });
}

SingularSpectrum1D::SingularSpectrum1D(LambdaSequence lambda) : lambda_(std::move(lambda)) {
    if (lambda_.kind() == LambdaSequence::Kind::explicit_list) {
        const auto& v = lambda_.values();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0.0) continue;
            if (k == 0) {
                sorted_.push_back({0, sigma2(0)});
            } else {
                const int ki = static_cast<int>(k);
                sorted_.push_back({ki, sigma2(ki)});
                sorted_.push_back({-ki, sigma2(-ki)});
            }
        }
        std::stable_sort(sorted_.begin(), sorted_.end(), [](const Entry& a, const Entry& b) {
            if (a.sigma2 != b.sigma2) return a.sigma2 > b.sigma2;
            return frequency_key(a.k) < frequency_key(b.k);
        });
        exhausted_ = true;
    } else if (lambda_.beta1() == 0.0) {
        sorted_.push_back({0, sigma2(0)});
        exhausted_ = true;
    }
}

double SingularSpectrum1D::sigma2(int k) const {
    const double lam = lambda_.at(static_cast<std::size_t>(k < 0 ? -k : k));
    return k == 0 ? lam * lam : 0.5 * lam * lam;
}

double SingularSpectrum1D::sigma(int k) const { return std::sqrt(sigma2(k)); }

void SingularSpectrum1D::extend_to(std::size_t pos) {
    // korobov weights: sigma_k^2 strictly decreasing in k >= 1
    const double zero_weight = sigma2(0);
    while (!exhausted_ && sorted_.size() <= pos) {
        const double w = sigma2(next_k_);
        if (!zero_placed_ && zero_weight >= w) {
            sorted_.push_back({0, zero_weight});
            zero_placed_ = true;
            continue;
        }
        if (w == 0.0) {
            if (!zero_placed_) {
                sorted_.push_back({0, zero_weight});
                zero_placed_ = true;
            }
            exhausted_ = true;
            break;
        }
        sorted_.push_back({next_k_, w});
        sorted_.push_back({-next_k_, w});
        ++next_k_;
    }
}

std::optional<SingularSpectrum1D::Entry> SingularSpectrum1D::sorted_entry(std::size_t pos) {
    extend_to(pos);
    if (pos < sorted_.size()) return sorted_[pos];
    return std::nullopt;
}

double tensor_sigma2(const SingularSpectrum1D& spectrum, std::span<const int> k) {
    std::vector<double> factors;
    factors.reserve(k.size());
    for (const int kj : k) factors.push_back(spectrum.sigma2(kj));
    std::sort(factors.begin(), factors.end());
    double prod = 1.0;
    for (const double f : factors) prod *= f;
    return prod;
}

TensorIndexEnumerator::TensorIndexEnumerator(const LambdaSequence& lambda, std::size_t d)
    : spectrum_(lambda), d_(d) {
    if (d_ == 0) throw std::invalid_argument("TensorIndexEnumerator: dimension must be >= 1");
    if (auto root = make_node(std::vector<std::uint32_t>(d_, 0))) heap_.push(std::move(*root));
}

std::optional<TensorIndexEnumerator::Node> TensorIndexEnumerator::make_node(
    std::vector<std::uint32_t> pos) {
    std::vector<double> factors;
    factors.reserve(d_);
    for (const auto p : pos) {
        const auto entry = spectrum_.sorted_entry(p);
        if (!entry) return std::nullopt;
        factors.push_back(entry->sigma2);
    }
    std::sort(factors.begin(), factors.end());
    double w = 1.0;
    for (const double f : factors) w *= f;
    return Node{w, std::move(pos)};
}

void TensorIndexEnumerator::push_children(const Node& node) {
    // Each tuple has the unique parent obtained by decrementing its last
    // nonzero position, so children only bump coordinates at or after it.
    std::size_t last = 0;
    for (std::size_t j = 0; j < d_; ++j) {
        if (node.pos[j] > 0) last = j;
    }
    for (std::size_t j = last; j < d_; ++j) {
        auto pos = node.pos;
        ++pos[j];
        if (auto child = make_node(std::move(pos))) heap_.push(std::move(*child));
    }
}

std::optional<TensorIndexEnumerator::Item> TensorIndexEnumerator::next() {
    if (ready_.empty()) {
        if (heap_.empty()) return std::nullopt;
        const double w = heap_.top().weight;
        std::vector<Node> group;
        while (!heap_.empty() && heap_.top().weight == w) {
            Node node = heap_.top();
            heap_.pop();
            push_children(node);
            group.push_back(std::move(node));
        }
        for (const auto& node : group) {
            Item item;
            item.sigma2 = node.weight;
            item.index.reserve(d_);
            for (const auto p : node.pos) item.index.push_back(spectrum_.sorted_entry(p)->k);
            ready_.push_back(std::move(item));
        }
        std::sort(ready_.begin(), ready_.end(),
                  [](const Item& a, const Item& b) { return key_less(b.index, a.index); });
    }
    Item out = std::move(ready_.back());
    ready_.pop_back();
    return out;
}

IndexSelection top_n_indices(const LambdaSequence& lambda, std::size_t d, std::size_t n) {
    IndexSelection sel;
    sel.d = d;
    TensorIndexEnumerator it(lambda, d);
    sel.indices.reserve(n);
    sel.sigma2.reserve(n);
    while (sel.indices.size() < n) {
        auto item = it.next();
        if (!item) break;
        sel.captured_mass += item->sigma2;
        sel.sigma2.push_back(item->sigma2);
        sel.indices.push_back(std::move(item->index));
    }
    return sel;
}

double det_lower_bound(const LambdaSequence& lambda, std::size_t d, std::size_t n) {
    if (!lambda.normalized()) {
        throw std::invalid_argument("det_lower_bound: lambda must be normalized (total mass 1)");
    }
    const auto sel = top_n_indices(lambda, d, n);
    return std::sqrt(std::max(0.0, 1.0 - sel.captured_mass));
}

std::size_t completed_pair_count(const IndexSelection& sel, std::size_t n) {
    n = std::min(n, sel.indices.size());
    std::map<MultiIndex, std::size_t> seen;  // |k| pattern -> members selected so far
    std::size_t incomplete = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (incomplete == 0) best = i;
        const auto& k = sel.indices[i];
        MultiIndex pattern(k.size());
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < k.size(); ++j) {
            pattern[j] = k[j] < 0 ? -k[j] : k[j];
            if (k[j] != 0) ++nonzero;
        }
        const std::size_t orbit = std::size_t{1} << nonzero;
        auto& count = seen[pattern];
        if (count == 0 && orbit > 1) ++incomplete;
        ++count;
        if (count == orbit && orbit > 1) --incomplete;
    }
    return best;
}

SparseCoefFunction project(const SparseCoefFunction& f, const IndexSelection& sel) {
    if (f.dim() != sel.d) throw std::invalid_argument("project: dimension mismatch");
    std::vector<MultiIndex> keep = sel.indices;
    std::sort(keep.begin(), keep.end());
    std::vector<int> idx;
    std::vector<double> cf;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto k = f.index(i);
        const MultiIndex key(k.begin(), k.end());
        if (!std::binary_search(keep.begin(), keep.end(), key)) continue;
        idx.insert(idx.end(), k.begin(), k.end());
        cf.push_back(f.coef(i));
    }
    return SparseCoefFunction(f.dim(), f.lambda(), std::move(idx), std::move(cf));
}

double det_worst_case_error(const LambdaSequence& lambda, std::size_t d, const IndexSelection& sel,
                            std::size_t grid_points_per_dim, std::size_t grid_budget) {
    if (sel.d != d) throw std::invalid_argument("det_worst_case_error: dimension mismatch");
    const std::size_t G = grid_points_per_dim;
    if (G == 0) throw std::invalid_argument("det_worst_case_error: empty grid");
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) {
        if (total > grid_budget / G) {
            throw std::length_error("det_worst_case_error: grid of " + std::to_string(G) + "^" +
                                    std::to_string(d) + " points exceeds the budget");
        }
        total *= G;
    }
    int k_max = 0;
    for (const auto& k : sel.indices) {
        for (const int kj : k) k_max = std::max(k_max, kj < 0 ? -kj : kj);
    }
    // squared basis values, table[(k + k_max) * G + g]
    const std::size_t width = 2 * static_cast<std::size_t>(k_max) + 1;
    std::vector<double> table(width * G);
    for (int k = -k_max; k <= k_max; ++k) {
        for (std::size_t g = 0; g < G; ++g) {
            const double v = eval_basis_1d(lambda, k, static_cast<double>(g) / static_cast<double>(G));
            table[static_cast<std::size_t>(k + k_max) * G + g] = v * v;
        }
    }
    const double diag = std::pow(lambda.squared_sum(), static_cast<double>(d));
    std::vector<std::size_t> point(d, 0);
    double worst = 0.0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t j = 0; j < d; ++j) {
            point[j] = rest % G;
            rest /= G;
        }
        double captured = 0.0;
        for (const auto& k : sel.indices) {
            double term = 1.0;
            for (std::size_t j = 0; j < d; ++j) {
                term *= table[static_cast<std::size_t>(k[j] + k_max) * G + point[j]];
            }
            captured += term;
        }
        const double radicand = diag - captured;
        if (radicand < -1e-10) {
            throw std::runtime_error("det_worst_case_error: negative residual kernel " +
                                     std::to_string(radicand));
        }
        worst = std::max(worst, std::sqrt(std::max(0.0, radicand)));
    }
    return worst;
}

double curse_beta(const LambdaSequence& lambda) {
    const double l0 = lambda.at(0);
    double beta = l0 * l0;
    if (lambda.kind() == LambdaSequence::Kind::explicit_list) {
        const auto& v = lambda.values();
        for (std::size_t k = 1; k < v.size(); ++k) beta = std::max(beta, 0.5 * v[k] * v[k]);
    } else {
        beta = std::max(beta, 0.5 * lambda.beta1());
    }
    return beta;
}

double curse_bound(double beta, std::size_t d, double eps) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("curse_bound: beta must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("curse_bound: eps must lie in (0, 1)");
    return std::pow(beta, -static_cast<double>(d)) * (1.0 - eps) * (1.0 - eps);
}

}  // namespace ranapprox
