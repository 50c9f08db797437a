#include "ranapprox/random.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

namespace ranapprox {
namespace {

TEST(SeedTest, DerivationIsPureAndSeparatesStreams) {
    EXPECT_EQ(derive_seed(42, "mc_error", 3), derive_seed(42, "mc_error", 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t master : {0ULL, 1ULL, 42ULL}) {
        for (const char* stream : {"a", "b", "sup_norm", "mc_error"}) {
            for (std::uint64_t i = 0; i < 50; ++i) seen.insert(derive_seed(master, stream, i));
        }
    }
    EXPECT_EQ(seen.size(), 3u * 4u * 50u);
}

TEST(SeedTest, MatchesDocumentedFormula) {
    const std::uint64_t master = 123456789;
    const std::uint64_t expect = mix64(mix64(master ^ fnv1a64("stream")) + mix64(7 + 1));
    EXPECT_EQ(derive_seed(master, "stream", 7), expect);
    // FNV-1a reference values
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(ParallelForTest, EveryIndexOnce) {
    for (unsigned threads : {1u, 2u, 7u}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    }
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelForTest, ResultsIndependentOfThreadCount) {
    const auto run = [](unsigned threads) {
        std::vector<double> out(64);
        parallel_for(out.size(), threads, [&](std::size_t i) {
            Rng rng(derive_seed(9, "t", i));
            std::normal_distribution<double> normal;
            out[i] = normal(rng);
        });
        return out;
    };
    EXPECT_EQ(run(1), run(4));
}

TEST(ParallelForTest, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(100, 4,
                              [](std::size_t i) {
                                  if (i == 37) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(ResolveThreadsTest, ExplicitThenEnvironment) {
    EXPECT_EQ(resolve_threads(3), 3u);
    ::setenv("RANAPPROX_THREADS", "5", 1);
    EXPECT_EQ(resolve_threads(0), 5u);
    ::unsetenv("RANAPPROX_THREADS");
    EXPECT_GE(resolve_threads(0), 1u);
}

}  // namespace
}  // namespace ranapprox
