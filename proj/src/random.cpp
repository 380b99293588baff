#include <spg/random.hpp>

#include <numeric>

namespace spg
{
    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        return splitmix64(seed + index);
    }

    auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        // rejection sampling on the top of the range keeps the draw unbiased
        const std::uint64_t limit = -bound % bound;
        while (true) {
            auto x = _engine();
            if (x >= limit)
                return x % bound;
        }
    }

    auto Rng::permutation(std::uint32_t size) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> result(size);
        std::iota(result.begin(), result.end(), 0u);
        shuffle(std::span{result});
        return result;
    }
}
