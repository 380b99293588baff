#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spg::detail
{
    /// Fixed-width bitset sized at runtime.
    class Bits
    {
    public:
        Bits() = default;
        explicit Bits(std::size_t size) : _words((size + 63) / 64, 0), _size(size) {}

        auto size() const -> std::size_t { return _size; }
        auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
        auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1; }

        auto count() const -> std::size_t
        {
            std::size_t n = 0;
            for (auto w : _words)
                n += std::popcount(w);
            return n;
        }

        auto intersection_count(const Bits & other) const -> std::size_t
        {
            std::size_t n = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                n += std::popcount(_words[i] & other._words[i]);
            return n;
        }

        auto operator&=(const Bits & other) -> Bits &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        /// Lowest set index, or size() if none.
        auto first() const -> std::size_t
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] != 0)
                    return i * 64 + std::countr_zero(_words[i]);
            return _size;
        }

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                for (auto w = _words[i]; w != 0; w &= w - 1)
                    f(i * 64 + std::countr_zero(w));
        }

        auto operator==(const Bits &) const -> bool = default;

    private:
        std::vector<std::uint64_t> _words;
        std::size_t _size = 0;
    };

    template <typename Set>
    auto to_bits(const Set & set, std::size_t universe) -> Bits
    {
        Bits b(universe);
        for (auto x : set)
            b.set(x);
        return b;
    }
}
