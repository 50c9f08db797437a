#pragma once

#include "ranapprox/numerics.hpp"
#include "ranapprox/random.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ranapprox {

inline constexpr double kNormalizationTolerance = 1e-12;

// Frequency weights lambda_k, k >= 0, of the one-dimensional space.
//
// Korobov kind:  lambda_0 = sqrt(beta0),  lambda_k = sqrt(beta1) k^{-r}.
// Explicit kind: a finite list, zero beyond its end.
class LambdaSequence {
public:
    enum class Kind { korobov, explicit_list };

    // Throws std::invalid_argument unless r > 1/2, beta0 > 0, beta1 >= 0.
    [[nodiscard]] static LambdaSequence korobov(double r, double beta0, double beta1);
    // Throws std::invalid_argument on an empty list, negative entries or lambda_0 <= 0.
    [[nodiscard]] static LambdaSequence explicit_values(std::vector<double> values);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] double beta0() const noexcept { return beta0_; }
    [[nodiscard]] double beta1() const noexcept { return beta1_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

    [[nodiscard]] double at(std::size_t k) const;

    // sum_k lambda_k^2
    [[nodiscard]] double squared_sum() const noexcept { return squared_sum_; }
    [[nodiscard]] bool normalized() const noexcept { return normalized_; }

    // Certified bracket for sum_{k > K} lambda_k^2, K >= 1.
    [[nodiscard]] TailBracket squared_tail(std::size_t K) const;
    // Smallest K with certified sum_{k > K} lambda_k^2 <= tol.
    [[nodiscard]] std::size_t squared_tail_cutoff(double tol) const;
    // Explicit lists vanish beyond support_size(); korobov weights never do.
    [[nodiscard]] bool finite_support() const noexcept { return kind_ == Kind::explicit_list; }
    [[nodiscard]] std::size_t support_size() const noexcept { return values_.size(); }

    friend bool operator==(const LambdaSequence&, const LambdaSequence&) = default;

private:
    LambdaSequence() = default;

    Kind kind_ = Kind::korobov;
    double r_ = 0.0;
    double beta0_ = 0.0;
    double beta1_ = 0.0;
    std::vector<double> values_;
    double squared_sum_ = 0.0;
    bool normalized_ = false;
};

// beta1 = (1 - beta0) / zeta(2r), so that beta0 + beta1 zeta(2r) = 1.
// Throws std::invalid_argument for r <= 1/2 or beta0 outside (0, 1).
[[nodiscard]] LambdaSequence normalize_korobov(double r, double beta0);

[[nodiscard]] inline double lambda_at(const LambdaSequence& seq, std::size_t k) {
    return seq.at(k);
}

// psi_0 = lambda_0, psi_k = lambda_k cos(2 pi k x), psi_{-k} = lambda_k sin(2 pi k x).
[[nodiscard]] double eval_basis_1d(const LambdaSequence& seq, int k, double x);

using MultiIndex = std::vector<int>;

// A function on the d-torus as a finite coefficient map with respect to the
// tensor basis psi_k(x) = prod_j psi_{k_j}(x_j). Indices are kept sorted
// lexicographically in one flat array; zero coefficients may be absent.
class SparseCoefFunction {
public:
    SparseCoefFunction(std::size_t d, LambdaSequence lambda);
    SparseCoefFunction(std::size_t d, LambdaSequence lambda,
                       const std::map<MultiIndex, double>& coefs);
    // Flat constructor: `indices` holds size*d entries, row-major. Rows need not
    // be sorted; duplicate rows are summed.
    SparseCoefFunction(std::size_t d, LambdaSequence lambda, std::vector<int> indices,
                       std::vector<double> coefs);

    [[nodiscard]] std::size_t dim() const noexcept { return d_; }
    [[nodiscard]] const LambdaSequence& lambda() const noexcept { return lambda_; }
    [[nodiscard]] std::size_t size() const noexcept { return coefs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return coefs_.empty(); }
    [[nodiscard]] std::span<const int> index(std::size_t i) const {
        return {indices_.data() + i * d_, d_};
    }
    [[nodiscard]] double coef(std::size_t i) const { return coefs_[i]; }
    [[nodiscard]] const std::vector<double>& coefs() const noexcept { return coefs_; }
    // Coefficient of a multi-index, zero when absent.
    [[nodiscard]] double coefficient(std::span<const int> k) const;

    [[nodiscard]] std::map<MultiIndex, double> to_map() const;

private:
    void sort_and_merge();

    std::size_t d_;
    LambdaSequence lambda_;
    std::vector<int> indices_;
    std::vector<double> coefs_;
};

// Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] double eval_function(const SparseCoefFunction& f, std::span<const double> x);

// Euclidean norm of the coefficients (the basis is orthonormal).
[[nodiscard]] double hilbert_norm(const SparseCoefFunction& f);

// a f + b g; f and g must share dimension and lambda.
[[nodiscard]] SparseCoefFunction linear_combination(double a, const SparseCoefFunction& f,
                                                    double b, const SparseCoefFunction& g);

// i.i.d. standard Gaussian coefficients on `support`, rescaled to unit norm.
[[nodiscard]] SparseCoefFunction random_unit_function(std::size_t d, const LambdaSequence& lambda,
                                                      std::span<const MultiIndex> support,
                                                      Rng& rng);

inline constexpr double kEmbedDroppedMass = 1e-10;

// Embeds f into dimension d+1 as f(x) K(0, x_{d+1}): every index gains a last
// coordinate k >= 0 with factor lambda_k, cut once the dropped mass of
// K(0, .) is <= 1e-10. Requires normalized lambda.
[[nodiscard]] SparseCoefFunction lopsided_embed(const SparseCoefFunction& f);

}  // namespace ranapprox
