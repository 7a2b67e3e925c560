#include "powerpath/containment.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>

#include "powerpath/detail/bitset.hpp"
#include "powerpath/errors.hpp"

namespace powerpath {

using detail::Bits;

namespace {

class Deadline {
public:
    explicit Deadline(const SearchBudget& budget) {
        if (budget.timeout) {
            limit_ = std::chrono::steady_clock::now() + *budget.timeout;
            armed_ = true;
        }
    }

    void tick() {
        if (!armed_ || (ticks_++ & 1023) != 0) return;
        if (std::chrono::steady_clock::now() >= limit_) throw ResourceError("containment search exceeded its time budget");
    }

private:
    bool armed_ = false;
    std::uint64_t ticks_ = 0;
    std::chrono::steady_clock::time_point limit_;
};

std::vector<std::size_t> degrees_of(const AdjacencyView& g) {
    std::vector<std::size_t> d(g.order);
    for (Vertex v = 0; v < g.order; ++v) d[v] = detail::row_degree(g, v);
    return d;
}

// Necessary condition: the i-th largest pattern degree fits under the i-th largest host degree.
bool degree_sequence_fits(std::vector<std::size_t> host, std::vector<std::size_t> pattern) {
    if (pattern.size() > host.size()) return false;
    std::sort(host.rbegin(), host.rend());
    std::sort(pattern.rbegin(), pattern.rend());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] > host[i]) return false;
    }
    return true;
}

class SubgraphMatcher {
public:
    SubgraphMatcher(const AdjacencyView& host, const AdjacencyView& pattern, const SearchBudget& budget)
        : host_(host), pattern_(pattern), deadline_(budget) {
        host_degree_ = degrees_of(host);
        pattern_degree_ = degrees_of(pattern);
        twin_ = detail::twin_classes(host);
    }

    std::optional<Embedding> find(std::optional<Vertex> anchor) {
        if (pattern_.order == 0) return Embedding{};
        if (!degree_sequence_fits(host_degree_, pattern_degree_)) return std::nullopt;
        if (!anchor) return search_from(std::nullopt, 0);
        // Only pattern vertices not equivalent under a pattern twin swap need trying.
        const auto pattern_twins = detail::twin_classes(pattern_);
        for (Vertex x = 0; x < pattern_.order; ++x) {
            if (pattern_twins[x] != x) continue;
            if (pattern_degree_[x] > host_degree_[*anchor]) continue;
            if (auto e = search_from(x, *anchor)) return e;
        }
        return std::nullopt;
    }

private:
    void plan(std::optional<Vertex> first) {
        const std::size_t k = pattern_.order;
        order_.clear();
        std::vector<bool> placed(k, false);
        std::vector<std::size_t> links(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            Vertex pick = 0;
            bool have = false;
            if (step == 0 && first) {
                pick = *first;
                have = true;
            }
            for (Vertex x = 0; x < k && !(step == 0 && first); ++x) {
                if (placed[x]) continue;
                if (!have || links[x] > links[pick] ||
                    (links[x] == links[pick] && pattern_degree_[x] > pattern_degree_[pick])) {
                    pick = x;
                    have = true;
                }
            }
            placed[pick] = true;
            order_.push_back(pick);
            for (Vertex y = 0; y < k; ++y) {
                if (pattern_.adjacent(pick, y)) ++links[y];
            }
        }
        back_links_.assign(k, {});
        std::vector<std::size_t> position(k);
        for (std::size_t i = 0; i < k; ++i) position[order_[i]] = i;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (pattern_.adjacent(order_[i], order_[j])) back_links_[i].push_back(j);
            }
        }
    }

    std::optional<Embedding> search_from(std::optional<Vertex> first, Vertex anchor) {
        plan(first);
        image_.assign(pattern_.order, 0);
        used_ = Bits(host_.order);
        if (first) {
            image_[0] = anchor;
            used_.set(anchor);
            if (!extend(1)) return std::nullopt;
        } else if (!extend(0)) {
            return std::nullopt;
        }
        Embedding e;
        e.mapping.assign(pattern_.order, 0);
        for (std::size_t i = 0; i < order_.size(); ++i) e.mapping[order_[i]] = image_[i];
        if (!is_embedding(host_, pattern_, e)) throw Error("internal: subgraph matcher produced an invalid embedding");
        return e;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        deadline_.tick();
        const Vertex x = order_[depth];
        Bits candidates = Bits::all(host_.order);
        for (std::size_t j : back_links_[depth]) candidates &= host_.row(image_[j]);
        candidates.and_not(used_);
        std::vector<Vertex> tried_classes;
        bool found = false;
        candidates.for_each([&](Vertex v) {
            if (found || host_degree_[v] < pattern_degree_[x]) return;
            if (std::find(tried_classes.begin(), tried_classes.end(), twin_[v]) != tried_classes.end()) return;
            tried_classes.push_back(twin_[v]);
            image_[depth] = v;
            used_.set(v);
            found = extend(depth + 1);
            used_.reset(v);
        });
        return found;
    }

    const AdjacencyView& host_;
    const AdjacencyView& pattern_;
    Deadline deadline_;
    std::vector<std::size_t> host_degree_, pattern_degree_;
    std::vector<Vertex> twin_;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::size_t>> back_links_;
    std::vector<Vertex> image_;
    Bits used_;
};

class PathPowerSearcher {
public:
    PathPowerSearcher(const AdjacencyView& host, std::size_t k, std::size_t p, const SearchBudget& budget)
        : host_(host), k_(k), p_(p), deadline_(budget) {
        host_degree_ = degrees_of(host);
        twin_ = detail::twin_classes(host);
        need_.resize(k);
        for (std::size_t i = 0; i < k; ++i) need_[i] = std::min(i, p) + std::min(k - 1 - i, p);
    }

    std::optional<Embedding> find(std::optional<Vertex> anchor) {
        if (k_ == 0) return Embedding{};
        if (k_ > host_.order) return std::nullopt;
        std::vector<std::size_t> pattern_degrees(need_.begin(), need_.end());
        if (!degree_sequence_fits(host_degree_, pattern_degrees)) return std::nullopt;
        if (!anchor) {
            std::vector<std::size_t> fill(k_);
            std::iota(fill.begin(), fill.end(), std::size_t{0});
            memo_enabled_ = host_.order <= 32;
            return run(fill, std::nullopt, 0);
        }
        // Reversal maps position i to k-1-i, so the first half of positions suffices.
        for (std::size_t i = 0; i <= (k_ - 1) / 2; ++i) {
            if (host_degree_[*anchor] < need_[i]) continue;
            std::vector<std::size_t> fill;
            for (std::size_t j = i; j < k_; ++j) fill.push_back(j);
            for (std::size_t j = i; j-- > 0;) fill.push_back(j);
            memo_enabled_ = false;
            if (auto e = run(fill, *anchor, i)) return e;
        }
        return std::nullopt;
    }

private:
    std::optional<Embedding> run(const std::vector<std::size_t>& fill, std::optional<Vertex> anchor, std::size_t at) {
        fill_ = fill;
        links_.assign(k_, {});
        std::vector<bool> placed(k_, false);
        for (std::size_t d = 0; d < k_; ++d) {
            const std::size_t pos = fill_[d];
            for (std::size_t q = 0; q < k_; ++q) {
                const std::size_t dist = q > pos ? q - pos : pos - q;
                if (placed[q] && dist >= 1 && dist <= p_) links_[d].push_back(q);
            }
            placed[pos] = true;
        }
        seq_.assign(k_, 0);
        used_ = Bits(host_.order);
        failed_.clear();
        std::size_t depth = 0;
        if (anchor) {
            seq_[at] = *anchor;
            used_.set(*anchor);
            depth = 1;
        }
        if (!extend(depth)) return std::nullopt;
        Embedding e{seq_};
        const Graph pattern = path_power(k_, p_);
        if (!is_embedding(host_, pattern.view(), e)) throw Error("internal: path-power search produced an invalid embedding");
        return e;
    }

    // Used set plus the last p placed vertices determine every later choice
    // when positions are filled left to right.
    std::string memo_key(std::size_t depth) const {
        std::string key(reinterpret_cast<const char*>(used_.words().data()), used_.words().size() * 8);
        for (std::size_t i = depth > p_ ? depth - p_ : 0; i < depth; ++i) key.push_back(static_cast<char>(seq_[i]));
        return key;
    }

    bool extend(std::size_t depth) {
        if (depth == k_) return true;
        deadline_.tick();
        std::string key;
        if (memo_enabled_ && depth > 0) {
            key = memo_key(depth);
            if (failed_.count(key)) return false;
        }
        const std::size_t pos = fill_[depth];
        Bits candidates = Bits::all(host_.order);
        for (std::size_t q : links_[depth]) candidates &= host_.row(seq_[q]);
        candidates.and_not(used_);
        std::vector<Vertex> tried_classes;
        bool found = false;
        candidates.for_each([&](Vertex v) {
            if (found || host_degree_[v] < need_[pos]) return;
            if (std::find(tried_classes.begin(), tried_classes.end(), twin_[v]) != tried_classes.end()) return;
            tried_classes.push_back(twin_[v]);
            seq_[pos] = v;
            used_.set(v);
            found = extend(depth + 1);
            used_.reset(v);
        });
        if (!found && memo_enabled_ && depth > 0 && failed_.size() < (1u << 20)) failed_.insert(std::move(key));
        return found;
    }

    const AdjacencyView& host_;
    std::size_t k_, p_;
    Deadline deadline_;
    std::vector<std::size_t> host_degree_;
    std::vector<Vertex> twin_;
    std::vector<std::size_t> need_;
    std::vector<std::size_t> fill_;
    std::vector<std::vector<std::size_t>> links_;
    std::vector<Vertex> seq_;
    Bits used_;
    bool memo_enabled_ = false;
    std::unordered_set<std::string> failed_;
};

}  // namespace

bool is_embedding(const AdjacencyView& host, const AdjacencyView& pattern, const Embedding& e) {
    if (e.mapping.size() != pattern.order) return false;
    std::vector<bool> hit(host.order, false);
    for (Vertex v : e.mapping) {
        if (v >= host.order || hit[v]) return false;
        hit[v] = true;
    }
    for (Vertex x = 0; x < pattern.order; ++x) {
        for (Vertex y = x + 1; y < pattern.order; ++y) {
            if (pattern.adjacent(x, y) && !host.adjacent(e.mapping[x], e.mapping[y])) return false;
        }
    }
    return true;
}

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern, const SearchBudget& budget) {
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    const auto hv = host.view();
    const auto pv = pattern.view();
    SubgraphMatcher matcher(hv, pv, budget);
    return matcher.find(std::nullopt);
}

std::optional<Embedding> contains_subgraph_through(const AdjacencyView& host, const Graph& pattern, Vertex anchor,
                                                   const SearchBudget& budget) {
    if (anchor >= host.order) throw InputError("anchor vertex out of range");
    if (pattern.order() > host.order || pattern.order() == 0) return std::nullopt;
    const auto pv = pattern.view();
    SubgraphMatcher matcher(host, pv, budget);
    return matcher.find(anchor);
}

std::optional<Embedding> contains_path_power(const Graph& host, std::size_t k, std::size_t p,
                                             const SearchBudget& budget) {
    if (k == 0 || p == 0) throw ParameterError("contains_path_power needs k >= 1 and p >= 1");
    const auto hv = host.view();
    PathPowerSearcher searcher(hv, k, p, budget);
    return searcher.find(std::nullopt);
}

std::optional<Embedding> contains_path_power_through(const AdjacencyView& host, std::size_t k, std::size_t p,
                                                     Vertex anchor, const SearchBudget& budget) {
    if (k == 0 || p == 0) throw ParameterError("contains_path_power needs k >= 1 and p >= 1");
    if (anchor >= host.order) throw InputError("anchor vertex out of range");
    PathPowerSearcher searcher(host, k, p, budget);
    return searcher.find(anchor);
}

bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const std::size_t n = g.order();
    if (a + b > n) return false;
    if (a == 0) return true;
    const auto view = g.view();
    std::function<bool(Vertex, std::size_t, const Bits&)> choose = [&](Vertex from, std::size_t picked,
                                                                      const Bits& common) -> bool {
        if (picked == a) return common.count() >= b;
        for (Vertex v = from; v + (a - picked) <= n; ++v) {
            Bits next = common;
            next &= view.row(v);
            if (next.count() < b) continue;
            if (choose(v + 1, picked + 1, next)) return true;
        }
        return false;
    };
    return choose(0, 0, Bits::all(n));
}

std::size_t count_disjoint_cliques(const Graph& g, std::size_t q) {
    if (q == 0) throw ParameterError("count_disjoint_cliques needs q >= 1");
    const std::size_t n = g.order();
    if (q == 1) return n;
    const auto view = g.view();

    // cliques_at[v]: every q-clique whose smallest vertex is v.
    std::vector<std::vector<Bits>> cliques_at(n);
    std::function<void(Vertex, Bits&, const Bits&, std::size_t)> grow = [&](Vertex root, Bits& members,
                                                                           const Bits& cand, std::size_t size) {
        if (size == q) {
            cliques_at[root].push_back(members);
            return;
        }
        cand.for_each([&](Vertex v) {
            Bits next = cand;
            next &= view.row(v);
            for (Vertex u = 0; u <= v; ++u) next.reset(u);
            members.set(v);
            grow(root, members, next, size + 1);
            members.reset(v);
        });
    };
    for (Vertex v = 0; v < n; ++v) {
        Bits members(n);
        members.set(v);
        Bits cand = Bits::of(view.row(v));
        for (Vertex u = 0; u <= v; ++u) cand.reset(u);
        grow(v, members, cand, 1);
    }

    // All cliques through v, for branching on the lowest free vertex.
    std::vector<std::vector<const Bits*>> through(n);
    for (Vertex r = 0; r < n; ++r) {
        for (const auto& c : cliques_at[r]) c.for_each([&](Vertex v) { through[v].push_back(&c); });
    }

    std::size_t best = 0;
    std::function<void(Bits&, std::size_t)> pack = [&](Bits& free, std::size_t have) {
        // Vertices still coverable by some clique inside `free`.
        Vertex pivot = 0;
        bool any = false;
        std::size_t coverable = 0;
        free.for_each([&](Vertex v) {
            for (const Bits* c : through[v]) {
                Bits inside = *c;
                inside.and_not(free);
                if (inside.none()) {
                    ++coverable;
                    if (!any) {
                        pivot = v;
                        any = true;
                    }
                    break;
                }
            }
        });
        best = std::max(best, have);
        if (!any || have + coverable / q <= best) return;
        for (const Bits* c : through[pivot]) {
            Bits inside = *c;
            inside.and_not(free);
            if (!inside.none()) continue;
            Bits rest = free;
            rest.and_not(*c);
            pack(rest, have + 1);
        }
        free.reset(pivot);
        pack(free, have);
        free.set(pivot);
    };
    Bits free = Bits::all(n);
    pack(free, 0);
    return best;
}

}  // namespace powerpath
