#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace powdom {

/// Compile-time capacity shared by every VertexSet and Graph in the library;
/// parsers and solvers reject anything larger.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex indices in [0, kMaxVertices). The universe size
/// is implied by the owning Graph; all operations are exact and allocation-free.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() : words_{} {}

    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        assert(n >= 0 && n <= kMaxVertices);
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (n >= lo + 64)
                s.words_[w] = ~uint64_t{0};
            else if (n > lo)
                s.words_[w] = (uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr bool contains(int v) const {
        assert(in_range(v));
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    constexpr void insert(int v) {
        assert(in_range(v));
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    constexpr void erase(int v) {
        assert(in_range(v));
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    constexpr int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    constexpr bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    constexpr bool is_subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    constexpr bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    /// Smallest element, or -1 if empty.
    constexpr int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest element strictly greater than v, or -1.
    constexpr int next(int v) const {
        assert(v >= 0);
        if (v + 1 >= kMaxVertices) return -1;
        int w = (v + 1) >> 6;
        uint64_t word = words_[w] & (~uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (word) return w * 64 + std::countr_zero(word);
            if (++w == kWords) return -1;
            word = words_[w];
        }
    }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] |= b.words_[w];
        return a;
    }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] &= b.words_[w];
        return a;
    }
    /// Set difference a \ b.
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] &= ~b.words_[w];
        return a;
    }
    friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] ^= b.words_[w];
        return a;
    }
    constexpr VertexSet& operator|=(const VertexSet& b) { return *this = *this | b; }
    constexpr VertexSet& operator&=(const VertexSet& b) { return *this = *this & b; }
    constexpr VertexSet& operator-=(const VertexSet& b) { return *this = *this - b; }

    /// Complement within the universe {0..n-1}.
    constexpr VertexSet complement_in(int n) const { return full(n) - *this; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Order used for deterministic tie-breaking among candidate sets:
    /// lexicographic on the sorted tuple of elements, so {0,3} < {1,2} and a
    /// proper prefix precedes its extensions.
    bool lex_less(const VertexSet& o) const {
        const int d = (*this ^ o).first();
        if (d < 0) return false;  // equal
        // Below d the two sets agree. If d is ours, we win unless o stops short.
        const VertexSet above = full(kMaxVertices) - full(d + 1);
        return contains(d) ? !(o & above).empty() : (*this & above).empty();
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    struct iterator {
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const VertexSet* set;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = set->next(v);
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& o) const { return v == o.v; }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    constexpr const std::array<uint64_t, kWords>& words() const { return words_; }

private:
    static constexpr bool in_range(int v) { return v >= 0 && v < kMaxVertices; }

    std::array<uint64_t, kWords> words_;
};

}  // namespace powdom
