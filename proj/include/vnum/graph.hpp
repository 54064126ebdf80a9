#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/monomial.hpp"
#include "vnum/text.hpp"

namespace vnum {

using Vertex = std::size_t;              // 1-based
using VertexSet = std::vector<Vertex>;   // sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;  // first < second

/// Labeled simple graph on vertices 1..n.
class Graph {
public:
    static Graph from_edges(std::size_t n, const std::vector<Edge>& pairs) {
        if (n == 0) throw DomainError("graph needs at least one vertex");
        std::vector<Edge> edges;
        for (auto [a, b] : pairs) {
            if (a == 0 || b == 0 || a > n || b > n)
                throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an endpoint outside 1.." +
                                  std::to_string(n));
            if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw DomainError("duplicate edge in simple graph");
        return Graph(n, std::move(edges), indexed_names(n));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const VarNames& labels() const noexcept { return labels_; }

    Graph with_labels(VarNames labels) const {
        if (labels.size() != n_) throw DomainError("label count must equal vertex count");
        Graph g = *this;
        g.labels_ = std::move(labels);
        return g;
    }

    bool adjacent(Vertex a, Vertex b) const {
        const Edge e{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    VertexSet neighbors(Vertex v) const {
        check_vertex(v);
        VertexSet out;
        for (auto [a, b] : edges_) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v == 0 || v > n_) throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(std::size_t n, std::vector<Edge> edges, VarNames labels)
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {}

    std::size_t n_;
    std::vector<Edge> edges_;
    VarNames labels_;
};

inline Graph path(std::size_t n) {
    if (n < 2) throw DomainError("path needs at least 2 vertices");
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph::from_edges(n, e);
}

/// Glues G2 onto G1 by identifying v2 with v1. G1 keeps its indices; the remaining
/// vertices of G2 follow in increasing order as n1+1, n1+2, ...
inline Graph clique_sum_1(const Graph& G1, const Graph& G2, Vertex v1 = 1, Vertex v2 = 1) {
    G1.check_vertex(v1);
    G2.check_vertex(v2);
    const std::size_t n1 = G1.vertex_count();
    auto relabel = [&](Vertex v) -> Vertex {
        if (v == v2) return v1;
        return n1 + (v < v2 ? v : v - 1);
    };
    std::vector<Edge> e = G1.edges();
    for (auto [a, b] : G2.edges()) e.emplace_back(relabel(a), relabel(b));
    return Graph::from_edges(n1 + G2.vertex_count() - 1, e);
}

/// Disjoint union plus every edge between the two vertex sets; G2 is shifted by n1.
inline Graph join(const Graph& G1, const Graph& G2) {
    const std::size_t n1 = G1.vertex_count(), n2 = G2.vertex_count();
    std::vector<Edge> e = G1.edges();
    for (auto [a, b] : G2.edges()) e.emplace_back(a + n1, b + n1);
    for (Vertex a = 1; a <= n1; ++a)
        for (Vertex b = 1; b <= n2; ++b) e.emplace_back(a, b + n1);
    return Graph::from_edges(n1 + n2, e);
}

/// I(G) = <x_i x_j : ij in E(G)> in n variables.
inline MonomialIdeal edge_ideal(const Graph& G) {
    if (G.edges().empty()) throw DomainError("edge ideal of an edgeless graph is the zero ideal");
    std::vector<Monomial> gens;
    for (auto [a, b] : G.edges()) {
        std::vector<Exponent> e(G.vertex_count(), 0);
        e[a - 1] = 1;
        e[b - 1] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(std::move(gens));
}

namespace detail {

inline std::vector<char> membership(const Graph& G, const VertexSet& A) {
    std::vector<char> in(G.vertex_count() + 1, 0);
    for (Vertex v : A) {
        G.check_vertex(v);
        in[v] = 1;
    }
    return in;
}

inline VertexSet members(const std::vector<char>& in) {
    VertexSet out;
    for (Vertex v = 1; v < in.size(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace detail

/// N(A): vertices x with {x} u A containing an edge.
inline VertexSet neighborhood(const Graph& G, const VertexSet& A) {
    const auto in = detail::membership(G, A);
    std::vector<char> out(in.size(), 0);
    for (auto [a, b] : G.edges()) {
        if (in[a]) out[b] = 1;
        if (in[b]) out[a] = 1;
    }
    return detail::members(out);
}

inline bool is_stable(const Graph& G, const VertexSet& A) {
    const auto in = detail::membership(G, A);
    return std::none_of(G.edges().begin(), G.edges().end(), [&](const Edge& e) { return in[e.first] && in[e.second]; });
}

inline bool is_vertex_cover(const Graph& G, const VertexSet& C) {
    const auto in = detail::membership(G, C);
    return std::all_of(G.edges().begin(), G.edges().end(), [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

/// A cover from which no single vertex can be dropped.
inline bool is_minimal_vertex_cover(const Graph& G, const VertexSet& C) {
    if (!is_vertex_cover(G, C)) return false;
    auto in = detail::membership(G, C);
    for (Vertex v : C) {
        in[v] = 0;
        const bool still = std::all_of(G.edges().begin(), G.edges().end(),
                                       [&](const Edge& e) { return in[e.first] || in[e.second]; });
        in[v] = 1;
        if (still) return false;
    }
    return true;
}

/// A stable set whose neighborhood is a minimal vertex cover, of size `value`.
struct StableWitness {
    std::size_t value = 0;
    VertexSet stable_set;

    friend bool operator==(const StableWitness&, const StableWitness&) = default;
};

inline constexpr std::size_t kMaxGraphSearchVertices = 24;

namespace detail {

using Mask = std::uint32_t;

inline VertexSet mask_to_set(Mask m) {
    VertexSet out;
    for (Vertex v = 1; m; ++v, m >>= 1)
        if (m & 1u) out.push_back(v);
    return out;
}

/// Bitmask view of a small graph for the subset searches.
struct MaskGraph {
    std::size_t n = 0;
    std::vector<Mask> adj;  // adj[v-1]
    std::vector<Edge> edges;

    explicit MaskGraph(const Graph& G) : n(G.vertex_count()), adj(G.vertex_count(), 0), edges(G.edges()) {
        if (n > kMaxGraphSearchVertices)
            throw DomainError("graph too large for subset search (max " + std::to_string(kMaxGraphSearchVertices) +
                              " vertices)");
        for (auto [a, b] : edges) {
            adj[a - 1] |= Mask{1} << (b - 1);
            adj[b - 1] |= Mask{1} << (a - 1);
        }
    }

    Mask bit(Vertex v) const { return Mask{1} << (v - 1); }

    bool covers(Mask c) const {
        return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return (c & (bit(e.first) | bit(e.second))) != 0; });
    }

    bool minimal_cover(Mask c) const {
        if (!covers(c)) return false;
        // v is removable iff all its neighbours are already in the cover.
        for (Mask r = c; r; r &= r - 1) {
            const Vertex v = static_cast<Vertex>(std::countr_zero(r)) + 1;
            if ((adj[v - 1] & ~c) == 0) return false;
        }
        return true;
    }

    Mask neighborhood(Mask a) const {
        Mask out = 0;
        for (Mask r = a; r; r &= r - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(r))];
        return out;
    }
};

/// Enumerates stable sets of exactly `k` vertices in lex order of their sorted vertex lists,
/// pruning any branch whose partial set is not stable.
struct StableSearch {
    const MaskGraph& g;
    std::uint64_t budget;
    std::uint64_t visited = 0;

    template <class Visit>
    bool extend(Vertex next, std::size_t k, Mask chosen, Mask blocked, Visit& visit) {
        if (k == 0) return visit(chosen);
        for (Vertex v = next; v + k - 1 <= g.n; ++v) {
            if (++visited > budget) throw BudgetExceeded(budget, visited);
            if (blocked & g.bit(v)) continue;
            if (!extend(v + 1, k - 1, chosen | g.bit(v), blocked | g.adj[v - 1], visit)) return false;
        }
        return true;
    }
};

inline void require_edges(const Graph& G) {
    if (G.edges().empty()) throw DomainError("v-number undefined for an edgeless graph");
}

}  // namespace detail

/// v(I(G)) as the smallest stable set A with N(A) a minimal vertex cover.
/// Subsets are tried by cardinality, then lex, so the first hit is minimal.
inline StableWitness v_graph(const Graph& G, std::uint64_t budget = kDefaultBudget) {
    detail::require_edges(G);
    const detail::MaskGraph g(G);
    detail::StableSearch search{g, budget};
    for (std::size_t k = 1; k <= g.n; ++k) {
        std::optional<detail::Mask> hit;
        auto visit = [&](detail::Mask a) {
            if (!g.minimal_cover(g.neighborhood(a))) return true;
            hit = a;
            return false;
        };
        search.extend(1, k, 0, 0, visit);
        if (hit) return StableWitness{k, detail::mask_to_set(*hit)};
    }
    // Any maximal stable set qualifies, so a graph with edges always has a witness.
    throw std::logic_error("v_graph: no witness found");
}

/// Every minimum-cardinality stable witness, in lex order.
inline std::vector<StableWitness> minimum_stable_witnesses(const Graph& G, std::uint64_t budget = kDefaultBudget) {
    detail::require_edges(G);
    const detail::MaskGraph g(G);
    detail::StableSearch search{g, budget};
    for (std::size_t k = 1; k <= g.n; ++k) {
        std::vector<StableWitness> out;
        auto visit = [&](detail::Mask a) {
            if (g.minimal_cover(g.neighborhood(a))) out.push_back(StableWitness{k, detail::mask_to_set(a)});
            return true;
        };
        search.extend(1, k, 0, 0, visit);
        if (!out.empty()) return out;
    }
    throw std::logic_error("minimum_stable_witnesses: no witness found");
}

/// All minimal vertex covers, sorted.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& G) {
    const detail::MaskGraph g(G);
    std::vector<VertexSet> out;
    const detail::Mask all = (detail::Mask{1} << g.n) - 1;
    for (detail::Mask c = 0;; ++c) {
        if (g.minimal_cover(c)) out.push_back(detail::mask_to_set(c));
        if (c == all) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// v(P_n) = floor(n/4) when n = 0,1 mod 4, floor(n/4) + 1 otherwise.
inline std::size_t v_path_closed(std::size_t n) {
    if (n < 2) throw DomainError("path formula needs n >= 2");
    return (n % 4 == 0 || n % 4 == 1) ? n / 4 : n / 4 + 1;
}

/// v(C_n) = v(P_{n-3}) + 1 for n >= 5; C_3 and C_4 both have v = 1.
inline std::size_t v_cycle_closed(std::size_t n) {
    if (n < 3) throw DomainError("cycle formula needs n >= 3");
    if (n < 5) return 1;
    return v_path_closed(n - 3) + 1;
}

/// v(G1 * G2) = min(v(G1), v(G2)). An edgeless operand has no v-number, in which
/// case the join itself is searched.
inline std::size_t v_join_closed(const Graph& G1, const Graph& G2, std::uint64_t budget = kDefaultBudget) {
    if (G1.edges().empty() || G2.edges().empty()) return v_graph(join(G1, G2), budget).value;
    return std::min(v_graph(G1, budget).value, v_graph(G2, budget).value);
}

enum class CliqueSumKind { CyclePath, CycleCycle };

struct CliqueSumAnalysis {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<std::size_t> exact;
};

/// The 1-clique sum of C_n with P_m (or C_m), glued at vertex 1 of each.
inline Graph clique_sum_graph(CliqueSumKind kind, std::size_t cycle_n, std::size_t other_m) {
    return clique_sum_1(cycle(cycle_n), kind == CliqueSumKind::CyclePath ? path(other_m) : cycle(other_m), 1, 1);
}

/// Closed-form bracket for v of the 1-clique sum of C_n and P_m (or C_m):
///   C_n + P_m: v(C_n) + v(P_{m-2}) - 1 <= v <= v(C_n) + v(P_{m-2}), exact at the lower end
///              when n = 1,2 mod 4 and m = 0 mod 4;
///   C_n + C_m: exactly v(C_n) + v(C_m) - 1.
inline CliqueSumAnalysis clique_sum_analysis(CliqueSumKind kind, std::size_t cycle_n, std::size_t other_m) {
    if (cycle_n < 3) throw DomainError("clique sum needs a cycle with at least 3 vertices");
    const std::size_t vc = v_cycle_closed(cycle_n);
    if (kind == CliqueSumKind::CycleCycle) {
        if (other_m < 3) throw DomainError("clique sum needs cycles with at least 3 vertices");
        const std::size_t v = vc + v_cycle_closed(other_m) - 1;
        return {v, v, v};
    }
    if (other_m < 4) throw DomainError("cycle+path clique sum needs a path with at least 4 vertices");
    const std::size_t vp = v_path_closed(other_m - 2);
    CliqueSumAnalysis r{vc + vp - 1, vc + vp, std::nullopt};
    if ((cycle_n % 4 == 1 || cycle_n % 4 == 2) && other_m % 4 == 0) r.exact = r.lower;
    return r;
}

}  // namespace vnum
