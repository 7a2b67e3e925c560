#include <numeric>
#include <queue>
#include <vector>

#include "powerpath/containment.hpp"

namespace powerpath {

namespace {

// Edmonds' blossom algorithm, O(n^3): BFS for augmenting paths from each free
// vertex, contracting odd cycles by relabeling their bases.
class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(g.order()), adj_(g.order()) {
        for (auto [u, v] : g.edges()) {
            adj_[u].push_back(static_cast<int>(v));
            adj_[v].push_back(static_cast<int>(u));
        }
        match_.assign(n_, -1);
    }

    std::size_t solve() {
        std::size_t size = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int end = find_augmenting(static_cast<int>(v));
            if (end == -1) continue;
            ++size;
            while (end != -1) {
                const int pv = parent_[end];
                const int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return size;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lca(v, to);
                    blossom_.assign(n_, false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = true;
                            q.push(static_cast<int>(i));
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    std::size_t n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, blossom_;
};

}  // namespace

std::size_t max_matching_size(const Graph& g) { return Blossom(g).solve(); }

}  // namespace powerpath
