#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace wormlab {

/// Fixed-width vertex set over at most 128 vertices.
struct VertexSet {
    static constexpr int capacity = 128;

    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    constexpr VertexSet() = default;

    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    constexpr bool test(int v) const {
        return ((v < 64 ? w0 >> v : w1 >> (v - 64)) & 1u) != 0;
    }
    constexpr void set(int v) {
        if (v < 64)
            w0 |= std::uint64_t{1} << v;
        else
            w1 |= std::uint64_t{1} << (v - 64);
    }
    constexpr void reset(int v) {
        if (v < 64)
            w0 &= ~(std::uint64_t{1} << v);
        else
            w1 &= ~(std::uint64_t{1} << (v - 64));
    }

    constexpr int count() const { return std::popcount(w0) + std::popcount(w1); }
    constexpr bool empty() const { return w0 == 0 && w1 == 0; }

    /// Lowest set bit, or -1 when empty.
    constexpr int lowest() const {
        if (w0 != 0) return std::countr_zero(w0);
        if (w1 != 0) return 64 + std::countr_zero(w1);
        return -1;
    }

    /// Lowest set bit strictly above v, or -1.
    constexpr int next_above(int v) const {
        VertexSet masked = *this;
        if (v < 63) {
            masked.w0 &= ~((std::uint64_t{2} << v) - 1);
        } else if (v == 63) {
            masked.w0 = 0;
        } else {
            masked.w0 = 0;
            if (v < 127) masked.w1 &= ~((std::uint64_t{2} << (v - 64)) - 1);
            else masked.w1 = 0;
        }
        return masked.lowest();
    }

    constexpr VertexSet operator&(const VertexSet& o) const { return {w0 & o.w0, w1 & o.w1}; }
    constexpr VertexSet operator|(const VertexSet& o) const { return {w0 | o.w0, w1 | o.w1}; }
    constexpr VertexSet operator^(const VertexSet& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
    constexpr VertexSet minus(const VertexSet& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
    constexpr bool operator==(const VertexSet& o) const = default;

    constexpr bool intersects(const VertexSet& o) const {
        return (w0 & o.w0) != 0 || (w1 & o.w1) != 0;
    }
    constexpr bool subset_of(const VertexSet& o) const {
        return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
    }

    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w0(lo), w1(hi) {}

    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::uint64_t x = w0;
        while (x != 0) {
            fn(std::countr_zero(x));
            x &= x - 1;
        }
        x = w1;
        while (x != 0) {
            fn(64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
};

/// Lexicographic order on the ascending vertex lists: the set owning the
/// lowest vertex in the symmetric difference comes first; a proper prefix
/// precedes its extensions.
inline bool vertex_list_less(const VertexSet& a, const VertexSet& b) {
    VertexSet d = a ^ b;
    if (d.empty()) return false;
    int v = d.lowest();
    if (a.test(v)) return b.next_above(v) >= 0;
    return a.next_above(v) < 0;
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::uint64_t h = s.w0 * 0x9e3779b97f4a7c15ull;
        h ^= s.w1 + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace wormlab
