#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#ifndef RIS_MAX_VERTICES
#define RIS_MAX_VERTICES 128
#endif

static_assert(RIS_MAX_VERTICES >= 64, "vertex cap must be at least 64");

namespace ris {

/// Fixed-width set of vertex ids in [0, capacity()).  All hot loops in the
/// search code operate on these; the width is a build-time cap so a set is a
/// couple of machine words.
class VertexSet {
public:
    static constexpr int capacity() { return kCap; }

    constexpr VertexSet() = default;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { w_[word(v)] |= bit(v); }
    void remove(int v) { w_[word(v)] &= ~bit(v); }
    bool contains(int v) const { return (w_[word(v)] & bit(v)) != 0; }

    int size() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int smallest() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    /// Largest member, or -1 when empty.
    int largest() const {
        for (int i = kWords - 1; i >= 0; --i)
            if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool any_member_geq(int v) const {
        if (v >= kCap) return false;
        if (v < 0) v = 0;
        int wi = word(v);
        if (w_[wi] & (~uint64_t{0} << (v & 63))) return true;
        for (int i = wi + 1; i < kWords; ++i)
            if (w_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Ascending member list.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (int i = 0; i < kWords; ++i) {
            uint64_t w = w_[i];
            while (w) {
                out.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (int i = 0; i < kWords; ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    /// True iff this sorts before `o` when both are written as ascending
    /// member lists (a strict prefix sorts first).
    bool lex_less(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i) {
            uint64_t diff = w_[i] ^ o.w_[i];
            if (!diff) continue;
            int d = i * 64 + std::countr_zero(diff);
            if (contains(d)) return !o.any_member_geq(d + 1) ? false : true;
            return !any_member_geq(d + 1);
        }
        return false;
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static constexpr int kCap = RIS_MAX_VERTICES;
    static constexpr int kWords = (kCap + 63) / 64;
    static constexpr int word(int v) { return v >> 6; }
    static constexpr uint64_t bit(int v) { return uint64_t{1} << (v & 63); }

    std::array<uint64_t, kWords> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return static_cast<std::size_t>(s.hash()); }
};

} // namespace ris
