#include "ranapprox/grid.hpp"
#include "ranapprox/model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace ranapprox {
namespace {

TEST(GridEvaluatorTest, MatchesPointwiseEvaluation) {
    const auto seq = normalize_korobov(1.25, 0.4);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> normal;
    for (const std::size_t d : {1u, 2u, 3u}) {
        std::vector<MultiIndex> indices;
        std::uniform_int_distribution<int> freq(-6, 6);
        for (int i = 0; i < 25; ++i) {
            MultiIndex k(d);
            for (auto& c : k) c = freq(rng);
            indices.push_back(k);
        }
        std::vector<double> coefs(indices.size());
        for (auto& c : coefs) c = normal(rng);
        const std::size_t G = 9;
        const GridEvaluator eval(seq, d, indices, G, 1 << 20);
        const auto values = eval.values(coefs);
        ASSERT_EQ(values.size(), eval.total_points());

        std::map<MultiIndex, double> merged;
        for (std::size_t i = 0; i < indices.size(); ++i) merged[indices[i]] += coefs[i];
        const SparseCoefFunction f(d, seq, merged);
        double worst = 0.0;
        for (std::size_t flat = 0; flat < values.size(); ++flat) {
            std::vector<double> x(d);
            std::size_t rest = flat;
            for (std::size_t j = d; j-- > 0;) {  // first coordinate slowest
                x[j] = static_cast<double>(rest % G) / G;
                rest /= G;
            }
            EXPECT_NEAR(values[flat], eval_function(f, x), 1e-12);
            worst = std::max(worst, std::abs(eval_function(f, x)));
        }
        EXPECT_NEAR(eval.max_abs(coefs), worst, 1e-12);
    }
}

TEST(GridEvaluatorTest, Budget) {
    const auto seq = normalize_korobov(1.25, 0.4);
    const std::vector<MultiIndex> indices{{0, 0, 0}};
    EXPECT_THROW(GridEvaluator(seq, 3, indices, 200, 1 << 20), GridBudgetError);
    EXPECT_NO_THROW(GridEvaluator(seq, 3, indices, 100, 1 << 20));
}

}  // namespace
}  // namespace ranapprox
