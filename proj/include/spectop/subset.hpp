#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spectop {

// A set of indices in [0, 64), stored as a bitmask.
class Subset {
public:
    static constexpr std::size_t capacity = 64;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset single(std::size_t i) { return Subset{std::uint64_t{1} << i}; }
    static constexpr Subset first(std::size_t n) {
        return Subset{n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

    // Smallest index; undefined on the empty set.
    constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    constexpr Subset& insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; return *this; }
    constexpr Subset& erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); return *this; }

    constexpr Subset operator&(Subset o) const { return Subset{bits_ & o.bits_}; }
    constexpr Subset operator|(Subset o) const { return Subset{bits_ | o.bits_}; }
    constexpr Subset operator-(Subset o) const { return Subset{bits_ & ~o.bits_}; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const Subset&) const = default;

    class iterator {
    public:
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<std::size_t> indices() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

// Canonical ordering for listings: smaller sets first, then by the sorted index sequence.
bool canonical_less(Subset a, Subset b);

// Calls f(s) for every subset s of `set` (including empty and `set`), in increasing bit order.
template <class F>
void for_each_subset(Subset set, F&& f) {
    const std::uint64_t m = set.bits();
    std::uint64_t s = 0;
    while (true) {
        f(Subset{s});
        if (s == m) break;
        s = (s - m) & m;
    }
}

}  // namespace spectop
