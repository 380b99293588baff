#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace spg
{
    /// SplitMix64 finalizer; used to derive independent per-trial seeds.
    auto splitmix64(std::uint64_t x) -> std::uint64_t;

    /// Seed for trial `index` of an experiment seeded with `seed`.
    auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;

    /// Seeded generator with a portable bounded draw, so that permutation
    /// streams are identical across standard library implementations
    /// (std::uniform_int_distribution and std::shuffle are not).
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform value in [0, bound). bound must be positive.
        auto below(std::uint64_t bound) -> std::uint64_t;

        /// In-place Fisher-Yates shuffle.
        template <typename T>
        auto shuffle(std::span<T> values) -> void
        {
            for (std::size_t i = values.size(); i > 1; --i) {
                auto j = static_cast<std::size_t>(below(i));
                std::swap(values[i - 1], values[j]);
            }
        }

        /// Uniformly random permutation of {0, ..., size-1}.
        auto permutation(std::uint32_t size) -> std::vector<std::uint32_t>;

    private:
        std::mt19937_64 _engine;
    };
}
