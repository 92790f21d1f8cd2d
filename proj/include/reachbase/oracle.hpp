#ifndef REACHBASE_ORACLE_HPP
#define REACHBASE_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"

// Brute-force ground truth. Nothing here uses the breadth-first reach or the
// strong-component machinery, so results can be compared against them.

namespace reachbase::oracle {

inline constexpr std::size_t max_cap = 16;

struct OracleResult {
    std::vector<VertexSet> minimal_sets;
    std::size_t universe_size = 0;
};

namespace detail {

using Mask = std::uint32_t;

/// Reflexive-transitive closure by repeated boolean squaring of (I + A).
/// Row u holds the bitmask of vertices reachable from u.
inline std::vector<Mask> closure_by_squaring(const Digraph& d) {
    const std::size_t n = d.order();
    std::vector<Mask> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u) rows[u] = Mask{1} << u;
    for (const auto& [tail, head] : d.arcs()) {
        rows[*d.index_of(tail)] |= Mask{1} << *d.index_of(head);
    }
    for (;;) {
        std::vector<Mask> squared(n, 0);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t w = 0; w < n; ++w) {
                if (rows[u] >> w & 1) squared[u] |= rows[w];
            }
        }
        if (squared == rows) return rows;
        rows = std::move(squared);
    }
}

inline Mask to_mask(const Digraph& d, const VertexSet& s) {
    Mask m = 0;
    for (const auto& v : s) m |= Mask{1} << d.require(v);
    return m;
}

/// Reach by relaxing the arc list until nothing changes. Size-agnostic.
inline std::vector<bool> fixpoint_reach(const Digraph& d, const VertexSet& seeds) {
    std::vector<bool> hit(d.order(), false);
    for (const auto& s : seeds) hit[d.require(s)] = true;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& [tail, head] : d.arcs()) arcs.emplace_back(*d.index_of(tail), *d.index_of(head));
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [u, v] : arcs) {
            if (hit[u] && !hit[v]) {
                hit[v] = true;
                changed = true;
            }
        }
    }
    return hit;
}

inline bool fixpoint_covers(const Digraph& d, const VertexSet& targets, const VertexSet& a) {
    auto hit = fixpoint_reach(d, a);
    return std::all_of(targets.begin(), targets.end(),
                       [&](const Label& t) { return hit[d.require(t)]; });
}

}  // namespace detail

/**
 * Every inclusion-minimal T-reaching subset of X(D), by exhaustive search over
 * all 2^|X| subsets. Refuses digraphs with more than `cap` vertices (cap is
 * itself limited to 16).
 */
inline OracleResult minimal_reaching_sets(const Digraph& d, const VertexSet& targets,
                                          std::size_t cap = max_cap) {
    using detail::Mask;
    if (cap == 0 || cap > max_cap) {
        throw CapacityError("oracle cap must be between 1 and " + std::to_string(max_cap));
    }
    if (d.order() > cap) {
        throw CapacityError("oracle refuses digraph with " + std::to_string(d.order()) +
                            " vertices (cap " + std::to_string(cap) + ")");
    }
    const Mask target_mask = detail::to_mask(d, targets);
    const auto rows = detail::closure_by_squaring(d);
    const std::size_t n = d.order();
    const std::size_t subsets = std::size_t{1} << n;

    std::vector<bool> reaching(subsets, false);
    for (std::size_t s = 0; s < subsets; ++s) {
        Mask covered = 0;
        for (std::size_t u = 0; u < n; ++u) {
            if (s >> u & 1) covered |= rows[u];
        }
        reaching[s] = (covered & target_mask) == target_mask;
    }

    OracleResult result;
    result.universe_size = n;
    for (std::size_t s = 0; s < subsets; ++s) {
        if (!reaching[s]) continue;
        bool minimal = true;
        for (std::size_t u = 0; u < n && minimal; ++u) {
            if ((s >> u & 1) && reaching[s & ~(std::size_t{1} << u)]) minimal = false;
        }
        if (!minimal) continue;
        VertexSet set;
        for (std::size_t u = 0; u < n; ++u) {
            if (s >> u & 1) set.insert(d.label(u));
        }
        result.minimal_sets.push_back(std::move(set));
    }
    std::sort(result.minimal_sets.begin(), result.minimal_sets.end());
    return result;
}

/// True iff `a` is T-reaching and no single removal keeps it T-reaching.
inline bool is_inclusion_minimal(const Digraph& d, const VertexSet& targets, const VertexSet& a) {
    for (const auto& v : a) d.require(v);
    if (!detail::fixpoint_covers(d, targets, a)) return false;
    for (const auto& v : a) {
        auto smaller = a;
        smaller.erase(v);
        if (detail::fixpoint_covers(d, targets, smaller)) return false;
    }
    return true;
}

}  // namespace reachbase::oracle

#endif
