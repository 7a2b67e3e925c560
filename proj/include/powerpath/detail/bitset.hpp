#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath::detail {

// Owning bit set sized for a given order; rows of an AdjacencyView have the same layout.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    static Bits all(std::size_t n) {
        Bits b(n);
        for (std::size_t v = 0; v < n; ++v) b.set(static_cast<Vertex>(v));
        return b;
    }
    static Bits of(std::span<const std::uint64_t> row) {
        Bits b;
        b.words_.assign(row.begin(), row.end());
        return b;
    }

    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

    Bits& operator&=(std::span<const std::uint64_t> row) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= row[i];
        return *this;
    }
    Bits& operator&=(const Bits& other) { return *this &= std::span<const std::uint64_t>(other.words_); }
    Bits& and_not(const Bits& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (std::uint64_t w = words_[i]; w; w &= w - 1) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }
    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::vector<std::uint64_t> words_;
};

inline std::size_t row_degree(const AdjacencyView& g, Vertex v) {
    std::size_t d = 0;
    for (auto w : g.row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

// twin_class[v] is the smallest u with N(u) \ {v} == N(v) \ {u}. Swapping two
// unused twins fixes every other vertex, so searches try one twin per class.
inline std::vector<Vertex> twin_classes(const AdjacencyView& g) {
    std::vector<Vertex> cls(g.order);
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < g.order; ++v) {
        cls[v] = v;
        for (Vertex r : reps) {
            bool twins = true;
            for (std::size_t w = 0; w < g.words && twins; ++w) {
                std::uint64_t a = g.row(v)[w];
                std::uint64_t b = g.row(r)[w];
                if (w == (r >> 6)) a &= ~(std::uint64_t{1} << (r & 63));
                if (w == (v >> 6)) b &= ~(std::uint64_t{1} << (v & 63));
                twins = a == b;
            }
            if (twins) {
                cls[v] = r;
                break;
            }
        }
        if (cls[v] == v) reps.push_back(v);
    }
    return cls;
}

}  // namespace powerpath::detail
