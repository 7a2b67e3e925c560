#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "powerpath/errors.hpp"
#include "powerpath/oracle.hpp"

namespace powerpath {

namespace {

using Word = std::uint64_t;

class Colorer {
public:
    explicit Colorer(const Graph& g) : n_(g.order()), rows_(g.order(), 0) {
        for (auto [u, v] : g.edges()) {
            rows_[u] |= Word{1} << v;
            rows_[v] |= Word{1} << u;
        }
    }

    std::size_t clique_bound() {
        best_clique_ = 0;
        grow_clique(0, n_ == 64 ? ~Word{0} : (Word{1} << n_) - 1);
        return best_clique_;
    }

    std::size_t dsatur_greedy() {
        std::vector<int> color(n_, -1);
        std::vector<Word> used(n_, 0);  // colors seen in the neighbourhood, as a mask
        std::size_t colors = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            const std::size_t v = pick(color, used);
            const int c = std::countr_one(used[v]);
            assign(v, c, color, used);
            colors = std::max(colors, static_cast<std::size_t>(c) + 1);
        }
        return colors;
    }

    bool colorable(std::size_t k) {
        std::vector<int> color(n_, -1);
        std::vector<Word> used(n_, 0);
        return extend(k, 0, 0, color, used);
    }

private:
    void grow_clique(std::size_t size, Word cand) {
        if (cand == 0) {
            best_clique_ = std::max(best_clique_, size);
            return;
        }
        while (cand) {
            if (size + static_cast<std::size_t>(std::popcount(cand)) <= best_clique_) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            grow_clique(size + 1, cand & rows_[v]);
        }
    }

    std::size_t pick(const std::vector<int>& color, const std::vector<Word>& used) const {
        std::size_t best = n_;
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color[v] != -1) continue;
            const int sat = std::popcount(used[v]);
            int deg = 0;
            for (Word rest = rows_[v]; rest; rest &= rest - 1) deg += color[std::countr_zero(rest)] == -1;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(std::size_t v, int c, std::vector<int>& color, std::vector<Word>& used) const {
        color[v] = c;
        for (Word rest = rows_[v]; rest; rest &= rest - 1) used[std::countr_zero(rest)] |= Word{1} << c;
    }

    bool extend(std::size_t k, std::size_t placed, std::size_t open, std::vector<int>& color, std::vector<Word>& used) {
        if (placed == n_) return true;
        const std::size_t v = pick(color, used);
        // Colors beyond the first unused one are interchangeable.
        const std::size_t limit = std::min(k, open + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if ((used[v] >> c) & 1) continue;
            auto saved = used;
            assign(v, static_cast<int>(c), color, used);
            if (extend(k, placed + 1, std::max(open, c + 1), color, used)) return true;
            color[v] = -1;
            used = std::move(saved);
        }
        return false;
    }

    std::size_t n_;
    std::vector<Word> rows_;
    std::size_t best_clique_ = 0;
};

}  // namespace

std::size_t chromatic_number(const Graph& g) {
    if (g.order() > kChromaticOrderCap) {
        throw SizeError("chromatic_number supports order <= " + std::to_string(kChromaticOrderCap) + ", got " +
                        std::to_string(g.order()));
    }
    if (g.order() == 0) return 0;
    Colorer c(g);
    const std::size_t lower = c.clique_bound();
    std::size_t upper = c.dsatur_greedy();
    while (upper > lower && c.colorable(upper - 1)) --upper;
    return upper;
}

}  // namespace powerpath
