#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace mikado {

/// Maximum number of points a structure may carry; subsets fit one word.
inline constexpr int kMaxPoints = 64;

/// A subset of {0, ..., 63} packed into a machine word.
class PointSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr PointSet single(int p) { return PointSet(std::uint64_t{1} << p); }
    /// {0, ..., n-1}
    static constexpr PointSet range(int n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    template <class Range>
    static PointSet of(const Range& points) {
        PointSet s;
        for (int p : points) s.insert(p);
        return s;
    }
    static PointSet of(std::initializer_list<int> points) {
        PointSet s;
        for (int p : points) s.insert(p);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int p) const { return (bits_ >> p) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(int p) { bits_ |= std::uint64_t{1} << p; }
    constexpr void erase(int p) { bits_ &= ~(std::uint64_t{1} << p); }

    constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
    constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
    constexpr PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const PointSet&) const = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Orders point sets by their ascending member lists.
inline bool members_less(PointSet a, PointSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

}  // namespace mikado
