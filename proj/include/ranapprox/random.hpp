#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace ranapprox {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

// 64-bit FNV-1a of a tag string (experiment ids, stream names).
[[nodiscard]] std::uint64_t fnv1a64(std::string_view text) noexcept;

// Per-replication seed splitting rule:
//   seed_i = mix64(mix64(master ^ fnv1a64(stream)) + mix64(i + 1))
// Depends only on (master, stream, i), never on execution order.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                        std::uint64_t index) noexcept;

// Number of worker threads: explicit request if nonzero, else the
// RANAPPROX_THREADS environment variable, else hardware concurrency.
[[nodiscard]] unsigned resolve_threads(unsigned requested = 0);

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index runs
// exactly once; callers write results into index-addressed slots.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace ranapprox
