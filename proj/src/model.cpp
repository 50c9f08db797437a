#include "ranapprox/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ranapprox {

LambdaSequence LambdaSequence::korobov(double r, double beta0, double beta1) {
    if (!(r > 0.5)) {
        throw std::invalid_argument("korobov lambda: smoothness r must exceed 1/2, got " +
                                    std::to_string(r));
    }
    if (!(beta0 > 0.0)) throw std::invalid_argument("korobov lambda: beta0 must be positive");
    if (!(beta1 >= 0.0) || !std::isfinite(beta1)) {
        throw std::invalid_argument("korobov lambda: beta1 must be finite and nonnegative");
    }
    LambdaSequence seq;
    seq.kind_ = Kind::korobov;
    seq.r_ = r;
    seq.beta0_ = beta0;
    seq.beta1_ = beta1;
    seq.squared_sum_ = beta0 + beta1 * zeta(2.0 * r);
    seq.normalized_ = std::abs(seq.squared_sum_ - 1.0) <= kNormalizationTolerance;
    return seq;
}

LambdaSequence LambdaSequence::explicit_values(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("explicit lambda: empty list");
    for (const double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("explicit lambda: entries must be finite and >= 0");
        }
    }
    if (!(values.front() > 0.0)) throw std::invalid_argument("explicit lambda: lambda_0 must be > 0");
    LambdaSequence seq;
    seq.kind_ = Kind::explicit_list;
    double sum = 0.0;
    for (auto it = values.rbegin(); it != values.rend(); ++it) sum += *it * *it;
    seq.values_ = std::move(values);
    seq.squared_sum_ = sum;
    seq.normalized_ = std::abs(sum - 1.0) <= kNormalizationTolerance;
    return seq;
}

double LambdaSequence::at(std::size_t k) const {
    if (kind_ == Kind::explicit_list) return k < values_.size() ? values_[k] : 0.0;
    if (k == 0) return std::sqrt(beta0_);
    return std::sqrt(beta1_) * std::pow(static_cast<double>(k), -r_);
}

TailBracket LambdaSequence::squared_tail(std::size_t K) const {
    if (kind_ == Kind::explicit_list) {
        double sum = 0.0;
        for (std::size_t k = values_.size(); k-- > K + 1;) sum += values_[k] * values_[k];
        return {sum, sum};
    }
    const auto b = power_tail_bracket(2.0 * r_, static_cast<double>(std::max<std::size_t>(K, 1)));
    return {beta1_ * b.lower, beta1_ * b.upper};
}

std::size_t LambdaSequence::squared_tail_cutoff(double tol) const {
    if (!(tol > 0.0)) throw std::invalid_argument("squared_tail_cutoff: tolerance must be > 0");
    if (kind_ == Kind::explicit_list) {
        double tail = 0.0;
        std::size_t K = values_.size() - 1;
        while (K >= 1 && tail + values_[K] * values_[K] <= tol) {
            tail += values_[K] * values_[K];
            --K;
        }
        return K;
    }
    if (beta1_ == 0.0) return 1;
    return power_tail_cutoff(2.0 * r_, tol / beta1_);
}

LambdaSequence normalize_korobov(double r, double beta0) {
    if (!(r > 0.5)) {
        throw std::invalid_argument("normalize_korobov: r must exceed 1/2 (zeta(2r) diverges)");
    }
    if (!(beta0 > 0.0 && beta0 < 1.0)) {
        throw std::invalid_argument("normalize_korobov: beta0 must lie in (0, 1)");
    }
    return LambdaSequence::korobov(r, beta0, (1.0 - beta0) / zeta(2.0 * r));
}

double eval_basis_1d(const LambdaSequence& seq, int k, double x) {
    if (k == 0) return seq.at(0);
    const auto abs_k = static_cast<std::size_t>(k > 0 ? k : -k);
    const double lam = seq.at(abs_k);
    if (lam == 0.0) return 0.0;
    // reduce k x mod 1 before scaling by 2 pi to keep the phase accurate
    const double phase = 2.0 * std::numbers::pi * std::fmod(static_cast<double>(abs_k) * x, 1.0);
    return k > 0 ? lam * std::cos(phase) : lam * std::sin(phase);
}

SparseCoefFunction::SparseCoefFunction(std::size_t d, LambdaSequence lambda)
    : d_(d), lambda_(std::move(lambda)) {
    if (d_ == 0) throw std::invalid_argument("SparseCoefFunction: dimension must be >= 1");
}

SparseCoefFunction::SparseCoefFunction(std::size_t d, LambdaSequence lambda,
                                       const std::map<MultiIndex, double>& coefs)
    : SparseCoefFunction(d, std::move(lambda)) {
    indices_.reserve(coefs.size() * d_);
    coefs_.reserve(coefs.size());
    for (const auto& [k, c] : coefs) {
        if (k.size() != d_) throw std::invalid_argument("SparseCoefFunction: index length != d");
        if (!std::isfinite(c)) throw std::invalid_argument("SparseCoefFunction: non-finite coefficient");
        if (c == 0.0) continue;
        indices_.insert(indices_.end(), k.begin(), k.end());
        coefs_.push_back(c);
    }
}

SparseCoefFunction::SparseCoefFunction(std::size_t d, LambdaSequence lambda,
                                       std::vector<int> indices, std::vector<double> coefs)
    : SparseCoefFunction(d, std::move(lambda)) {
    if (indices.size() != coefs.size() * d_) {
        throw std::invalid_argument("SparseCoefFunction: index array size != coefficient count * d");
    }
    for (const double c : coefs) {
        if (!std::isfinite(c)) throw std::invalid_argument("SparseCoefFunction: non-finite coefficient");
    }
    indices_ = std::move(indices);
    coefs_ = std::move(coefs);
    sort_and_merge();
}

void SparseCoefFunction::sort_and_merge() {
    const std::size_t n = coefs_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto row = [this](std::size_t i) { return std::span<const int>(indices_.data() + i * d_, d_); };
    const auto less = [&](std::size_t a, std::size_t b) {
        const auto ra = row(a);
        const auto rb = row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    if (!std::is_sorted(order.begin(), order.end(), less)) std::stable_sort(order.begin(), order.end(), less);
    std::vector<int> idx;
    std::vector<double> cf;
    idx.reserve(indices_.size());
    cf.reserve(n);
    for (std::size_t pos = 0; pos < n;) {
        const auto r = row(order[pos]);
        double sum = 0.0;
        std::size_t end = pos;
        while (end < n && std::ranges::equal(row(order[end]), r)) sum += coefs_[order[end++]];
        if (sum != 0.0) {
            idx.insert(idx.end(), r.begin(), r.end());
            cf.push_back(sum);
        }
        pos = end;
    }
    indices_ = std::move(idx);
    coefs_ = std::move(cf);
}

double SparseCoefFunction::coefficient(std::span<const int> k) const {
    if (k.size() != d_) throw std::invalid_argument("coefficient: index length != d");
    std::size_t lo = 0;
    std::size_t hi = coefs_.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto r = index(mid);
        if (std::lexicographical_compare(r.begin(), r.end(), k.begin(), k.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < coefs_.size() && std::ranges::equal(index(lo), k)) return coefs_[lo];
    return 0.0;
}

std::map<MultiIndex, double> SparseCoefFunction::to_map() const {
    std::map<MultiIndex, double> out;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto k = index(i);
        out.emplace(MultiIndex(k.begin(), k.end()), coefs_[i]);
    }
    return out;
}

double eval_function(const SparseCoefFunction& f, std::span<const double> x) {
    if (x.size() != f.dim()) {
        throw std::invalid_argument("eval_function: point has dimension " + std::to_string(x.size()) +
                                    ", function has " + std::to_string(f.dim()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto k = f.index(i);
        double term = f.coef(i);
        for (std::size_t j = 0; j < k.size() && term != 0.0; ++j) {
            term *= eval_basis_1d(f.lambda(), k[j], x[j]);
        }
        sum += term;
    }
    return sum;
}

double hilbert_norm(const SparseCoefFunction& f) {
    double sum = 0.0;
    for (const double c : f.coefs()) sum += c * c;
    return std::sqrt(sum);
}

SparseCoefFunction linear_combination(double a, const SparseCoefFunction& f, double b,
                                      const SparseCoefFunction& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("linear_combination: dimension mismatch");
    if (!(f.lambda() == g.lambda())) throw std::invalid_argument("linear_combination: lambda mismatch");
    const std::size_t d = f.dim();
    std::vector<int> idx;
    std::vector<double> cf;
    idx.reserve((f.size() + g.size()) * d);
    cf.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto k = f.index(i);
        idx.insert(idx.end(), k.begin(), k.end());
        cf.push_back(a * f.coef(i));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto k = g.index(i);
        idx.insert(idx.end(), k.begin(), k.end());
        cf.push_back(b * g.coef(i));
    }
    return SparseCoefFunction(d, f.lambda(), std::move(idx), std::move(cf));
}

SparseCoefFunction random_unit_function(std::size_t d, const LambdaSequence& lambda,
                                        std::span<const MultiIndex> support, Rng& rng) {
    if (support.empty()) throw std::invalid_argument("random_unit_function: empty support");
    std::normal_distribution<double> normal;
    std::vector<int> idx;
    std::vector<double> cf;
    idx.reserve(support.size() * d);
    cf.reserve(support.size());
    double norm2 = 0.0;
    for (const auto& k : support) {
        if (k.size() != d) throw std::invalid_argument("random_unit_function: index length != d");
        idx.insert(idx.end(), k.begin(), k.end());
        const double c = normal(rng);
        cf.push_back(c);
        norm2 += c * c;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& c : cf) c *= scale;
    return SparseCoefFunction(d, lambda, std::move(idx), std::move(cf));
}

SparseCoefFunction lopsided_embed(const SparseCoefFunction& f) {
    const auto& lambda = f.lambda();
    if (!lambda.normalized()) throw std::invalid_argument("lopsided_embed: lambda must be normalized");
    const std::size_t K = lambda.finite_support() ? lambda.support_size() - 1
                                                   : lambda.squared_tail_cutoff(kEmbedDroppedMass);
    const std::size_t d = f.dim();
    std::vector<double> weights(K + 1);
    for (std::size_t k = 0; k <= K; ++k) weights[k] = lambda.at(k);
    std::vector<int> idx;
    std::vector<double> cf;
    idx.reserve(f.size() * (K + 1) * (d + 1));
    cf.reserve(f.size() * (K + 1));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto k = f.index(i);
        for (std::size_t extra = 0; extra <= K; ++extra) {
            if (weights[extra] == 0.0) continue;
            idx.insert(idx.end(), k.begin(), k.end());
            idx.push_back(static_cast<int>(extra));
            cf.push_back(f.coef(i) * weights[extra]);
        }
    }
    return SparseCoefFunction(d + 1, lambda, std::move(idx), std::move(cf));
}

}  // namespace ranapprox
