#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordpoly/detail/rng.hpp"
#include "chordpoly/errors.hpp"

namespace chordpoly {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; all algorithms treat it as a value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        adj_.resize(static_cast<std::size_t>(n));
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& list = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(list.begin(), list.end(), v);
    }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges as ordered pairs u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_clique() const {
        long long n = vertex_count();
        return 2LL * m_ == n * (n - 1);
    }

    /// Induced subgraph on `vertices` (ascending, distinct); vertex i of the
    /// result corresponds to vertices[i].
    Graph induced(std::span<const int> vertices) const {
        std::vector<int> index(static_cast<std::size_t>(vertex_count()), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            check_vertex(vertices[i]);
            if (i > 0 && vertices[i] <= vertices[i - 1])
                throw std::invalid_argument("induced: vertex list must be ascending");
            index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        }
        Graph g(static_cast<int>(vertices.size()));
        for (int u : vertices)
            for (int v : neighbors(u))
                if (u < v && index[static_cast<std::size_t>(v)] >= 0)
                    g.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    static void insert_sorted(std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it != list.end() && *it == x) throw std::invalid_argument("duplicate edge");
        list.insert(it, x);
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Connected components; each part ascending, parts ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> parts;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> part;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            part.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    q.push(v);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Distance hereditary construction sequences
// ---------------------------------------------------------------------------

enum class DhStepKind { Initial, Pendant, TrueTwin, FalseTwin };

struct DhStep {
    DhStepKind kind;
    int vertex;       // vertex created by this step
    int target = -1;  // existing vertex the step attaches to; unused for Initial
};

/// Build recipe for a connected distance hereditary graph: one Initial step,
/// then pendant / twin additions, each targeting an already-created vertex.
struct DhConstruction {
    std::vector<DhStep> steps;
    int size() const { return static_cast<int>(steps.size()); }
};

/// Replays a construction into the graph it describes.  The created vertex
/// labels must form exactly 0..n-1.
inline Graph replay(const DhConstruction& c) {
    const int n = c.size();
    if (n == 0) throw std::invalid_argument("empty construction");
    Graph g(n);
    std::vector<char> created(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const DhStep& s = c.steps[static_cast<std::size_t>(i)];
        if (s.vertex < 0 || s.vertex >= n || created[static_cast<std::size_t>(s.vertex)])
            throw std::invalid_argument("construction: bad vertex label at step " + std::to_string(i));
        if (i == 0) {
            if (s.kind != DhStepKind::Initial)
                throw std::invalid_argument("construction: first step must be Initial");
        } else {
            if (s.kind == DhStepKind::Initial)
                throw std::invalid_argument("construction: Initial step after the first");
            if (s.target < 0 || s.target >= n || !created[static_cast<std::size_t>(s.target)])
                throw std::invalid_argument("construction: step " + std::to_string(i) +
                                            " targets a vertex that does not exist yet");
            switch (s.kind) {
                case DhStepKind::Pendant:
                    g.add_edge(s.vertex, s.target);
                    break;
                case DhStepKind::TrueTwin: {
                    std::vector<int> nbrs(g.neighbors(s.target).begin(), g.neighbors(s.target).end());
                    for (int w : nbrs) g.add_edge(s.vertex, w);
                    g.add_edge(s.vertex, s.target);
                    break;
                }
                case DhStepKind::FalseTwin: {
                    std::vector<int> nbrs(g.neighbors(s.target).begin(), g.neighbors(s.target).end());
                    for (int w : nbrs) g.add_edge(s.vertex, w);
                    break;
                }
                default:
                    break;
            }
        }
        created[static_cast<std::size_t>(s.vertex)] = 1;
    }
    return g;
}

/// Result of distance hereditary recognition: a replayable construction on
/// acceptance, or the vertices of the stuck remainder on rejection.
struct DhRecognition {
    std::optional<DhConstruction> construction;
    std::vector<int> stuck_vertices;
    bool accepted() const { return construction.has_value(); }
};

/// Twin/pendant elimination.  Scan order per step: pendants first, then true
/// twins, then false twins, smallest vertex ids first; the larger twin is
/// removed.  Requires a connected graph with at least one vertex.
inline DhRecognition recognize_dh(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("recognize_dh: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("recognize_dh: graph is disconnected");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> order;  // alive vertices, ascending
    order.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order.push_back(v);

    auto remove_vertex = [&](int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            auto& list = adj[static_cast<std::size_t>(w)];
            list.erase(std::lower_bound(list.begin(), list.end(), v));
        }
        adj[static_cast<std::size_t>(v)].clear();
        order.erase(std::lower_bound(order.begin(), order.end(), v));
    };
    // Neighborhood equality with one vertex skipped on each side.
    auto same_neighbors = [&](int u, int v, int skip_u, int skip_v) {
        const auto& a = adj[static_cast<std::size_t>(u)];
        const auto& b = adj[static_cast<std::size_t>(v)];
        std::size_t i = 0, j = 0;
        while (true) {
            while (i < a.size() && a[i] == skip_u) ++i;
            while (j < b.size() && b[j] == skip_v) ++j;
            if (i == a.size() || j == b.size()) break;
            if (a[i] != b[j]) return false;
            ++i;
            ++j;
        }
        while (i < a.size() && a[i] == skip_u) ++i;
        while (j < b.size() && b[j] == skip_v) ++j;
        return i == a.size() && j == b.size();
    };

    std::vector<DhStep> removed;
    while (order.size() > 1) {
        int pick = -1;
        DhStep step{};
        for (int v : order)
            if (adj[static_cast<std::size_t>(v)].size() == 1) {
                pick = v;
                step = DhStep{DhStepKind::Pendant, v, adj[static_cast<std::size_t>(v)][0]};
                break;
            }
        if (pick < 0) {
            for (std::size_t i = 0; i < order.size() && pick < 0; ++i)
                for (std::size_t j = i + 1; j < order.size(); ++j) {
                    int u = order[i], v = order[j];
                    if (adj[static_cast<std::size_t>(u)].size() != adj[static_cast<std::size_t>(v)].size()) continue;
                    bool adjacent = std::binary_search(adj[static_cast<std::size_t>(u)].begin(),
                                                       adj[static_cast<std::size_t>(u)].end(), v);
                    if (adjacent && same_neighbors(u, v, v, u)) {
                        pick = v;
                        step = DhStep{DhStepKind::TrueTwin, v, u};
                        break;
                    }
                }
        }
        if (pick < 0) {
            for (std::size_t i = 0; i < order.size() && pick < 0; ++i)
                for (std::size_t j = i + 1; j < order.size(); ++j) {
                    int u = order[i], v = order[j];
                    if (adj[static_cast<std::size_t>(u)].size() != adj[static_cast<std::size_t>(v)].size()) continue;
                    bool adjacent = std::binary_search(adj[static_cast<std::size_t>(u)].begin(),
                                                       adj[static_cast<std::size_t>(u)].end(), v);
                    if (!adjacent && same_neighbors(u, v, -1, -1)) {
                        pick = v;
                        step = DhStep{DhStepKind::FalseTwin, v, u};
                        break;
                    }
                }
        }
        if (pick < 0) return DhRecognition{std::nullopt, order};
        removed.push_back(step);
        remove_vertex(pick);
    }

    DhConstruction c;
    c.steps.push_back(DhStep{DhStepKind::Initial, order.front()});
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) c.steps.push_back(*it);
    return DhRecognition{std::move(c), {}};
}

/// Seeded random connected distance hereditary graph on vertices 0..n-1,
/// built by uniform pendant/twin steps with uniform targets.  A false twin as
/// the very first addition would disconnect the graph, so that single draw is
/// taken as a pendant instead.
inline std::pair<Graph, DhConstruction> random_dh(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_dh: n must be positive");
    detail::Rng rng(seed);
    DhConstruction c;
    c.steps.push_back(DhStep{DhStepKind::Initial, 0});
    for (int i = 1; i < n; ++i) {
        int kind = rng.below_int(3);
        int target = rng.below_int(i);
        DhStepKind k = kind == 0   ? DhStepKind::Pendant
                       : kind == 1 ? DhStepKind::TrueTwin
                                   : DhStepKind::FalseTwin;
        if (i == 1 && k == DhStepKind::FalseTwin) k = DhStepKind::Pendant;
        c.steps.push_back(DhStep{k, i, target});
    }
    Graph g = replay(c);
    return {std::move(g), std::move(c)};
}

}  // namespace chordpoly
