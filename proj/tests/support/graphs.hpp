#ifndef REACHBASE_TESTS_SUPPORT_GRAPHS_HPP
#define REACHBASE_TESTS_SUPPORT_GRAPHS_HPP

// Fixtures, generators and a closure oracle shared by the test binaries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reachbase/digraph.hpp"

namespace reachbase::testing {

inline Digraph chain() { return build({}, {{"a", "b"}, {"b", "c"}}); }
inline Digraph cyc() { return build({}, {{"a", "b"}, {"b", "a"}, {"b", "c"}}); }
inline Digraph two_cycle() { return build({}, {{"a", "b"}, {"b", "a"}}); }
inline Digraph triangle() { return build({}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

inline std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

/// All pairs (i, j) over n vertices, loops included or not.
inline std::vector<std::pair<std::size_t, std::size_t>> slots(std::size_t n, bool loops) {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j || loops) result.emplace_back(i, j);
        }
    }
    return result;
}

/// The labelled digraph on vertices a, b, ... selected by the bits of `code`.
inline Digraph from_code(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         std::uint64_t code) {
    std::vector<Label> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(letter(i));
    std::vector<Arc> arcs;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (code >> b & 1) arcs.emplace_back(letter(pairs[b].first), letter(pairs[b].second));
    }
    return build(vertices, arcs);
}

/// Random digraph with 1..max_n vertices and arc density drawn per graph.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t max_n, bool loops = true) {
    std::uniform_int_distribution<std::size_t> order(1, max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto n = order(rng);
    const double density = 0.05 + 0.4 * unit(rng);
    std::vector<Label> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(letter(i));
    std::vector<Arc> arcs;
    for (auto [i, j] : slots(n, loops)) {
        if (unit(rng) < density) arcs.emplace_back(letter(i), letter(j));
    }
    return build(vertices, arcs);
}

inline VertexSet random_subset(std::mt19937_64& rng, const Digraph& d, double p = 0.35) {
    std::bernoulli_distribution keep(p);
    VertexSet s;
    for (const auto& v : d.labels()) {
        if (keep(rng)) s.insert(v);
    }
    return s;
}

/// Floyd-Warshall reflexive-transitive closure; closure[u][v] iff v is reachable from u.
inline std::vector<std::vector<bool>> closure(const Digraph& d) {
    const auto n = d.order();
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) c[u][u] = true;
    for (const auto& [t, h] : d.arcs()) c[*d.index_of(t)][*d.index_of(h)] = true;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!c[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (c[k][j]) c[i][j] = true;
            }
        }
    }
    return c;
}

inline VertexSet closure_reach(const Digraph& d, const VertexSet& s) {
    auto c = closure(d);
    VertexSet result;
    for (const auto& u : s) {
        auto i = *d.index_of(u);
        for (std::size_t j = 0; j < d.order(); ++j) {
            if (c[i][j]) result.insert(d.label(j));
        }
    }
    return result;
}

/// Strongly connected by the closure oracle (every pair mutually reachable).
inline bool closure_strongly_connected(const Digraph& d) {
    auto c = closure(d);
    for (std::size_t i = 0; i < d.order(); ++i) {
        for (std::size_t j = 0; j < d.order(); ++j) {
            if (!c[i][j]) return false;
        }
    }
    return true;
}

}  // namespace reachbase::testing

#endif
