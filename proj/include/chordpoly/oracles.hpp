#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "chordpoly/errors.hpp"
#include "chordpoly/graph.hpp"

namespace chordpoly {

/// Exhaustive oracles enumerate vertex subsets; instances above this cap are
/// rejected rather than attempted.
inline constexpr int kOracleCap = 16;

namespace detail {

inline void check_cap(const Graph& g, int cap, const char* op) {
    if (g.vertex_count() > cap)
        throw OracleCapError(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                             " vertices exceeds oracle cap " + std::to_string(cap));
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) mask[static_cast<std::size_t>(v)] |= 1u << w;
    return mask;
}

}  // namespace detail

/// Exact independence number by subset enumeration.
inline int bf_independence_number(const Graph& g, int cap = kOracleCap) {
    detail::check_cap(g, cap, "bf_independence_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto adj = detail::adjacency_masks(g);
    std::vector<char> independent(std::size_t{1} << n, 0);
    independent[0] = 1;
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int v = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        independent[s] = independent[rest] && (adj[static_cast<std::size_t>(v)] & rest) == 0;
        if (independent[s]) best = std::max(best, std::popcount(s));
    }
    return best;
}

/// Exact minimum clique cover: dynamic program over vertex subsets, covering
/// the lowest uncovered vertex by each clique containing it.
inline int bf_clique_cover_number(const Graph& g, int cap = kOracleCap) {
    detail::check_cap(g, cap, "bf_clique_cover_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<char> clique(std::size_t{1} << n, 0);
    clique[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        clique[s] = clique[rest] && (adj[static_cast<std::size_t>(v)] & rest) == rest;
    }
    std::vector<int> dp(std::size_t{1} << n, n + 1);
    dp[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int v = std::countr_zero(s);
        std::uint32_t rest = s & ~(1u << v);
        // All submasks of rest, each together with v, as the clique covering v.
        std::uint32_t sub = rest;
        while (true) {
            std::uint32_t cand = sub | (1u << v);
            if (clique[cand]) dp[s] = std::min(dp[s], 1 + dp[s & ~cand]);
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }
    return dp[full];
}

struct AsteroidalResult {
    int size = 0;
    std::vector<int> witness;  // ascending vertex ids of one maximum asteroidal set
};

namespace detail {

// Asteroidal sets inside one connected graph: A qualifies iff for every a in
// A, all of A-{a} lies in a single component of G - N[a].
inline AsteroidalResult bf_asteroidal_connected(const Graph& g) {
    const int n = g.vertex_count();
    // comp_id[a][x]: component of x in G - N[a], or -1 if x is in N[a].
    std::vector<std::vector<int>> comp_id(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int a = 0; a < n; ++a) {
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        removed[static_cast<std::size_t>(a)] = 1;
        for (int w : g.neighbors(a)) removed[static_cast<std::size_t>(w)] = 1;
        int comp = 0;
        for (int s = 0; s < n; ++s) {
            if (removed[static_cast<std::size_t>(s)] || comp_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] >= 0)
                continue;
            std::vector<int> stack{s};
            comp_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] = comp;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(u))
                    if (!removed[static_cast<std::size_t>(w)] &&
                        comp_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)] < 0) {
                        comp_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)] = comp;
                        stack.push_back(w);
                    }
            }
            ++comp;
        }
    }

    AsteroidalResult best;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (std::popcount(s) <= best.size) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!(s & (1u << a))) continue;
            int want = -2;
            for (std::uint32_t rest = s & ~(1u << a); rest && ok; rest &= rest - 1) {
                int x = std::countr_zero(rest);
                int c = comp_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
                if (c < 0)
                    ok = false;
                else if (want == -2)
                    want = c;
                else if (c != want)
                    ok = false;
            }
        }
        if (ok) {
            best.size = std::popcount(s);
            best.witness.clear();
            for (int v = 0; v < n; ++v)
                if (s & (1u << v)) best.witness.push_back(v);
        }
    }
    return best;
}

}  // namespace detail

/// Exact asteroidal number with one witness set.  For a disconnected graph the
/// result is the maximum over its connected components; the empty graph has
/// asteroidal number 0.
inline AsteroidalResult bf_asteroidal_number(const Graph& g, int cap = kOracleCap) {
    detail::check_cap(g, cap, "bf_asteroidal_number");
    if (g.vertex_count() == 0) return {};
    AsteroidalResult best;
    for (const auto& part : connected_components(g)) {
        AsteroidalResult r = detail::bf_asteroidal_connected(g.induced(part));
        if (r.size > best.size) {
            best.size = r.size;
            best.witness.clear();
            for (int v : r.witness) best.witness.push_back(part[static_cast<std::size_t>(v)]);
        }
    }
    return best;
}

}  // namespace chordpoly
