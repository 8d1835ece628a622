#pragma once

#include "votedim/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace votedim {

// Subset of {1, ..., capacity} stored as a 64-bit mask (bit i-1 <-> element i).
//
// The tag keeps member coalitions and hypergraph node sets apart at compile
// time. Ordering is lexicographic on the ascending element lists, so sorting a
// vector of sets gives the canonical listing order used in all outputs.
template <class Tag>
class IndexSet {
public:
    static constexpr int kMaxCapacity = 64;

    IndexSet() = default;

    explicit IndexSet(int capacity) : capacity_(checked_capacity(capacity)) {}

    // Throws InvalidArgument on an out-of-range or repeated index.
    static IndexSet from_indices(std::span<const int> indices, int capacity)
    {
        IndexSet s(capacity);
        for (int i : indices) {
            if (i < 1 || i > capacity)
                throw InvalidArgument("index " + std::to_string(i) + " out of range 1.." +
                                      std::to_string(capacity));
            if (s.contains(i))
                throw InvalidArgument("duplicate index " + std::to_string(i));
            s.bits_ |= bit(i);
        }
        return s;
    }

    static IndexSet from_indices(std::initializer_list<int> indices, int capacity)
    {
        return from_indices(std::span<const int>(indices.begin(), indices.size()), capacity);
    }

    static IndexSet from_mask(std::uint64_t mask, int capacity)
    {
        IndexSet s(capacity);
        if ((mask & ~full_mask(capacity)) != 0)
            throw InvalidArgument("mask has bits beyond capacity " + std::to_string(capacity));
        s.bits_ = mask;
        return s;
    }

    static IndexSet full(int capacity) { return from_mask(full_mask(capacity), capacity); }

    int capacity() const { return capacity_; }
    std::uint64_t mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int i) const { return i >= 1 && i <= capacity_ && (bits_ & bit(i)) != 0; }

    bool is_subset_of(const IndexSet& other) const
    {
        require_same_capacity(other);
        return (bits_ & ~other.bits_) == 0;
    }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    IndexSet with(int i) const
    {
        IndexSet s = *this;
        s.bits_ |= checked_bit(i);
        return s;
    }

    IndexSet without(int i) const
    {
        IndexSet s = *this;
        s.bits_ &= ~checked_bit(i);
        return s;
    }

    friend IndexSet operator|(const IndexSet& a, const IndexSet& b)
    {
        a.require_same_capacity(b);
        return raw(a.bits_ | b.bits_, a.capacity_);
    }
    friend IndexSet operator&(const IndexSet& a, const IndexSet& b)
    {
        a.require_same_capacity(b);
        return raw(a.bits_ & b.bits_, a.capacity_);
    }
    // Set difference.
    friend IndexSet operator-(const IndexSet& a, const IndexSet& b)
    {
        a.require_same_capacity(b);
        return raw(a.bits_ & ~b.bits_, a.capacity_);
    }
    // Symmetric difference.
    friend IndexSet operator^(const IndexSet& a, const IndexSet& b)
    {
        a.require_same_capacity(b);
        return raw(a.bits_ ^ b.bits_, a.capacity_);
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b)
    {
        return a.capacity_ == b.capacity_ && a.bits_ == b.bits_;
    }

    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b)
    {
        if (a.capacity_ != b.capacity_)
            return a.capacity_ <=> b.capacity_;
        std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0)
            return std::strong_ordering::equal;
        // All elements below the first difference are shared. The set holding
        // that element is smaller, unless the other set ends right there.
        int d = std::countr_zero(diff);
        const bool a_has = (a.bits_ >> d) & 1U;
        const std::uint64_t other_tail = (a_has ? b.bits_ : a.bits_) >> d;
        const bool holder_is_smaller = other_tail != 0;
        if (a_has == holder_is_smaller)
            return std::strong_ordering::less;
        return std::strong_ordering::greater;
    }

    // "{1,2,5}"
    std::string to_string() const
    {
        std::string out = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first)
                out += ',';
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }

    void require_same_capacity(const IndexSet& other) const
    {
        if (capacity_ != other.capacity_)
            throw DimensionMismatch("set over " + std::to_string(other.capacity_) +
                                    " elements used with " + std::to_string(capacity_));
    }

    static std::uint64_t full_mask(int capacity)
    {
        checked_capacity(capacity);
        return capacity == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << capacity) - 1);
    }

private:
    static int checked_capacity(int capacity)
    {
        if (capacity < 0 || capacity > kMaxCapacity)
            throw InvalidArgument("capacity " + std::to_string(capacity) + " outside 0..64");
        return capacity;
    }

    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }

    std::uint64_t checked_bit(int i) const
    {
        if (i < 1 || i > capacity_)
            throw InvalidArgument("index " + std::to_string(i) + " out of range 1.." +
                                  std::to_string(capacity_));
        return bit(i);
    }

    static IndexSet raw(std::uint64_t bits, int capacity)
    {
        IndexSet s(capacity);
        s.bits_ = bits;
        return s;
    }

    int capacity_ = 0;
    std::uint64_t bits_ = 0;
};

struct MemberTag {};
struct NodeTag {};

// Subset of the member set {1..n}.
using Coalition = IndexSet<MemberTag>;
// Subset of hypergraph nodes {1..t}.
using NodeSet = IndexSet<NodeTag>;

inline Coalition coalition_from_indices(std::span<const int> indices, int n)
{
    return Coalition::from_indices(indices, n);
}

inline Coalition coalition_from_indices(std::initializer_list<int> indices, int n)
{
    return Coalition::from_indices(indices, n);
}

}  // namespace votedim
