#include "powerpath/canonical.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "powerpath/detail/canon.hpp"
#include "powerpath/errors.hpp"
#include "powerpath/graph6.hpp"

namespace powerpath {

namespace detail {

namespace {

using Word = std::uint64_t;

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMaxAutomorphisms = 256;

Word bit(Vertex v) { return Word{1} << v; }
bool singleton(Word cell) { return (cell & (cell - 1)) == 0; }

// Splits cells until the ordered partition is equitable. Fragments of a split
// cell are ordered by neighbour count into the splitter, which keeps the
// result a function of the graph and the input partition only.
void refine(const Word* adj, std::vector<Word>& cells) {
    Vertex members[64];
    int counts[64];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const Word splitter = cells[w];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const Word cell = cells[c];
                if (singleton(cell)) continue;
                int size = 0;
                bool uniform = true;
                for (Word rest = cell; rest; rest &= rest - 1) {
                    const auto v = static_cast<Vertex>(std::countr_zero(rest));
                    members[size] = v;
                    counts[size] = std::popcount(adj[v] & splitter);
                    if (counts[size] != counts[0]) uniform = false;
                    ++size;
                }
                if (uniform) continue;
                int order[64];
                std::iota(order, order + size, 0);
                std::stable_sort(order, order + size, [&](int a, int b) { return counts[a] < counts[b]; });
                std::vector<Word> fragments;
                int last = -1;
                for (int i = 0; i < size; ++i) {
                    const int idx = order[i];
                    if (counts[idx] != last) {
                        fragments.push_back(0);
                        last = counts[idx];
                    }
                    fragments.back() |= bit(members[idx]);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(), fragments.end());
                changed = true;
                break;
            }
        }
    }
}

class Searcher {
public:
    Searcher(const Word* adj, std::size_t n) : adj_(adj), n_(n) { seed_twin_automorphisms(); }

    CanonResult run() {
        std::vector<Word> cells;
        if (n_ > 0) cells.push_back(n_ == 64 ? ~Word{0} : (Word{1} << n_) - 1);
        search(std::move(cells));
        CanonResult out;
        out.vertex_at = best_lab_;
        out.rows = best_rows_;
        out.automorphisms = std::move(automorphisms_);
        return out;
    }

private:
    // Transposing two twins fixes every other vertex, so it is an automorphism
    // that stabilises any individualisation path avoiding both twins.
    void seed_twin_automorphisms() {
        std::vector<bool> placed(n_, false);
        for (Vertex u = 0; u < n_; ++u) {
            if (placed[u]) continue;
            for (Vertex v = u + 1; v < n_; ++v) {
                if (placed[v]) continue;
                if ((adj_[u] & ~bit(v)) == (adj_[v] & ~bit(u))) {
                    placed[v] = true;
                    std::vector<Vertex> swap(n_);
                    std::iota(swap.begin(), swap.end(), Vertex{0});
                    std::swap(swap[u], swap[v]);
                    add_automorphism(std::move(swap));
                }
            }
        }
    }

    void add_automorphism(std::vector<Vertex> gamma) {
        if (automorphisms_.size() < kMaxAutomorphisms) automorphisms_.push_back(std::move(gamma));
    }

    Vertex find(std::vector<Vertex>& parent, Vertex v) const {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    // True if v shares an orbit with a tried vertex under the automorphisms
    // found so far that fix the current path pointwise.
    bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried) {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), Vertex{0});
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](Vertex x) { return gamma[x] == x; });
            if (!fixes) continue;
            for (Vertex x = 0; x < n_; ++x) {
                Vertex a = find(parent, x), b = find(parent, gamma[x]);
                if (a != b) parent[a] = b;
            }
        }
        const Vertex root = find(parent, v);
        return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(parent, t) == root; });
    }

    std::size_t search(std::vector<Word> cells) {
        refine(adj_, cells);
        if (cells.size() == n_) return leaf(cells);
        std::size_t target = 0;
        while (singleton(cells[target])) ++target;
        const Word cell = cells[target];
        const std::size_t depth = path_.size();
        std::vector<Vertex> tried;
        for (Word rest = cell; rest; rest &= rest - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(rest));
            if (!tried.empty() && equivalent_to_tried(v, tried)) continue;
            std::vector<Word> child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(v));
            child.push_back(cell & ~bit(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            path_.push_back(v);
            const std::size_t jump = search(std::move(child));
            path_.pop_back();
            tried.push_back(v);
            if (jump < depth) return jump;
        }
        return kNoJump;
    }

    static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return i;
    }

    std::vector<Vertex> automorphism_between(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const {
        std::vector<Vertex> gamma(n_);
        for (std::size_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
        return gamma;
    }

    std::size_t leaf(const std::vector<Word>& cells) {
        std::vector<Vertex> lab(n_);
        std::vector<Vertex> position(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            lab[i] = static_cast<Vertex>(std::countr_zero(cells[i]));
            position[lab[i]] = static_cast<Vertex>(i);
        }
        std::vector<Word> rows(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (Word rest = adj_[lab[i]]; rest; rest &= rest - 1) {
                rows[i] |= bit(position[std::countr_zero(rest)]);
            }
        }
        if (!have_first_) {
            have_first_ = true;
            first_lab_ = best_lab_ = lab;
            first_rows_ = best_rows_ = rows;
            first_path_ = best_path_ = path_;
            return kNoJump;
        }
        if (rows == first_rows_) {
            add_automorphism(automorphism_between(first_lab_, lab));
            return common_prefix(first_path_, path_);
        }
        if (rows == best_rows_) {
            add_automorphism(automorphism_between(best_lab_, lab));
            return common_prefix(best_path_, path_);
        }
        if (rows > best_rows_) {
            best_lab_ = std::move(lab);
            best_rows_ = std::move(rows);
            best_path_ = path_;
        }
        return kNoJump;
    }

    const Word* adj_;
    std::size_t n_;
    std::vector<Vertex> path_;
    bool have_first_ = false;
    std::vector<Vertex> first_lab_, best_lab_;
    std::vector<Word> first_rows_, best_rows_;
    std::vector<Vertex> first_path_, best_path_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonResult canonicalize(std::span<const std::uint64_t> rows, std::size_t n) {
    if (n > kCanonicalOrderCap) {
        throw SizeError("canonical labeling supports order <= " + std::to_string(kCanonicalOrderCap));
    }
    Searcher searcher(rows.data(), n);
    return searcher.run();
}

}  // namespace detail

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalOrderCap) {
        throw SizeError("canonical labeling supports order <= " + std::to_string(kCanonicalOrderCap) + ", got " +
                        std::to_string(g.order()));
    }
    std::vector<std::uint64_t> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row(v)[0];
    auto result = detail::canonicalize(rows, g.order());
    CanonicalLabeling out;
    out.vertex_at = std::move(result.vertex_at);
    out.automorphisms = std::move(result.automorphisms);
    std::vector<Vertex> position(g.order());
    for (std::size_t i = 0; i < out.vertex_at.size(); ++i) position[out.vertex_at[i]] = static_cast<Vertex>(i);
    out.canonical_graph = relabel(g, position);
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_labeling(g).canonical_graph)}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace powerpath
