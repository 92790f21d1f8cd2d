#ifndef REACHBASE_BASES_HPP
#define REACHBASE_BASES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"
#include "reachbase/scc.hpp"

namespace reachbase {

enum class BasisKind { point, arc };

inline const char* to_string(BasisKind k) { return k == BasisKind::point ? "point" : "arc"; }

/// What a reaching set has to cover: every vertex, every arc tail, or a
/// prescribed target set.
class ReachingKind {
   public:
    enum class Tag { point, arc, target };

    static ReachingKind point() { return ReachingKind(Tag::point, {}); }
    static ReachingKind arc() { return ReachingKind(Tag::arc, {}); }
    static ReachingKind target(VertexSet t) { return ReachingKind(Tag::target, std::move(t)); }
    static ReachingKind of(BasisKind k) { return k == BasisKind::point ? point() : arc(); }

    Tag tag() const noexcept { return tag_; }
    const VertexSet& targets() const noexcept { return targets_; }

    /// The vertices that must be reached in `d`.
    VertexSet required(const Digraph& d) const {
        switch (tag_) {
            case Tag::point:
                return d.vertex_set();
            case Tag::arc:
                return tails(d);
            case Tag::target:
                for (const auto& t : targets_) d.require(t);
                return targets_;
        }
        return {};
    }

   private:
    ReachingKind(Tag tag, VertexSet t) : tag_(tag), targets_(std::move(t)) {}
    Tag tag_;
    VertexSet targets_;
};

/// Required vertices that `a` fails to reach. Empty iff `a` is reaching.
inline VertexSet unreached(const Digraph& d, const ReachingKind& kind, const VertexSet& a) {
    auto required = kind.required(d);
    auto seeds = indices_of(d, a);
    auto covered = reach_mask(d, seeds);
    VertexSet missing;
    for (const auto& t : required) {
        if (!covered[*d.index_of(t)]) missing.insert(missing.end(), t);
    }
    return missing;
}

/// Definitional check: every required vertex lies in R(a).
inline bool is_reaching(const Digraph& d, const ReachingKind& kind, const VertexSet& a) {
    return unreached(d, kind, a).empty();
}

namespace detail {

/// Initial components that a basis of the given kind must meet.
/// Arc bases skip isolated vertices.
inline std::vector<std::size_t> relevant_initial_components(const Digraph& d, const Condensation& c,
                                                            BasisKind kind) {
    auto initial = initial_component_indices(c);
    if (kind == BasisKind::point) return initial;
    std::vector<std::size_t> result;
    for (auto k : initial) {
        auto m = c.partition.members(k);
        if (m.size() == 1 && is_isolate(d, m.front())) continue;
        result.push_back(k);
    }
    return result;
}

}  // namespace detail

/// Reaching test via initial strong components (finite digraphs only): a point
/// set must meet every initial component; an arc set must meet, within
/// D⁻, every initial component of D⁻.
inline bool is_reaching_by_characterization(const Digraph& d, BasisKind kind, const VertexSet& a) {
    for (const auto& v : a) d.require(v);
    const Digraph& g = kind == BasisKind::point ? d : strip(d, StripMode::sinks);
    auto c = condensation(g);
    std::vector<bool> hit(c.partition.count(), false);
    for (const auto& v : a) {
        if (auto i = g.index_of(v)) hit[c.partition.component_of(*i)] = true;
    }
    for (auto k : initial_component_indices(c)) {
        if (!hit[k]) return false;
    }
    return true;
}

/// The basis made of the least member of each relevant initial component.
inline VertexSet basis(const Digraph& d, BasisKind kind) {
    auto c = condensation(d);
    VertexSet result;
    for (auto k : detail::relevant_initial_components(d, c, kind)) {
        auto v = c.partition.canonical(k);
        if (kind == BasisKind::arc && is_sink(d, v)) {
            throw std::logic_error("arc basis candidate '" + d.label(v) + "' is a sink");
        }
        result.insert(d.label(v));
    }
    return result;
}

using BigCount = boost::multiprecision::cpp_int;

/**
 * All bases of one kind: every choice of exactly one vertex from each
 * relevant initial component. Sets are produced in lexicographic order of
 * their sorted member sequences, each exactly once.
 *
 * The object owns its data; for_each is a single-pass producer that may be
 * stopped early by returning false from the visitor.
 */
class BasisEnumeration {
   public:
    BasisEnumeration(const Digraph& d, BasisKind kind) : labels_(d.labels()) {
        auto c = condensation(d);
        for (auto k : detail::relevant_initial_components(d, c, kind)) {
            auto m = c.partition.members(k);
            blocks_.emplace_back(m.begin(), m.end());
        }
    }

    /// Product of block sizes; 1 when there are no blocks (the empty basis).
    BigCount count() const {
        BigCount total = 1;
        for (const auto& b : blocks_) total *= b.size();
        return total;
    }

    std::size_t basis_size() const noexcept { return blocks_.size(); }

    /// Calls `visit` with each basis in order until it returns false.
    /// Returns the number of sets visited.
    std::size_t for_each(const std::function<bool(const VertexSet&)>& visit) const {
        const std::size_t k = blocks_.size();
        if (k == 0) {
            visit(VertexSet{});
            return 1;
        }
        std::size_t n = labels_.size();
        std::vector<std::size_t> block_of(n, k);
        for (std::size_t b = 0; b < k; ++b) {
            for (auto v : blocks_[b]) block_of[v] = b;
        }

        std::vector<bool> used(k, false);
        std::vector<std::size_t> chosen;
        struct Level {
            std::vector<std::size_t> candidates;
            std::size_t next = 0;
        };
        std::vector<Level> levels;
        levels.push_back({candidates(block_of, used, std::nullopt), 0});
        std::size_t visited = 0;

        while (!levels.empty()) {
            auto& level = levels.back();
            if (!chosen.empty() && chosen.size() == levels.size()) {
                used[block_of[chosen.back()]] = false;
                chosen.pop_back();
            }
            if (level.next == level.candidates.size()) {
                levels.pop_back();
                continue;
            }
            auto x = level.candidates[level.next++];
            chosen.push_back(x);
            used[block_of[x]] = true;
            if (chosen.size() == k) {
                VertexSet s;
                for (auto v : chosen) s.insert(s.end(), labels_[v]);
                ++visited;
                if (!visit(s)) return visited;
                continue;
            }
            levels.push_back({candidates(block_of, used, x), 0});
        }
        return visited;
    }

    std::vector<VertexSet> take(std::size_t limit) const {
        std::vector<VertexSet> out;
        if (limit == 0) return out;
        for_each([&](const VertexSet& s) {
            out.push_back(s);
            return out.size() < limit;
        });
        return out;
    }

   private:
    // Next-element candidates in ascending order: vertices above `lower` in an
    // unused block, provided every other unused block still has a larger member.
    std::vector<std::size_t> candidates(const std::vector<std::size_t>& block_of,
                                        const std::vector<bool>& used,
                                        std::optional<std::size_t> lower) const {
        constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
        std::size_t min_max = none, second_max = none, min_block = none;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (used[b]) continue;
            auto top = blocks_[b].back();
            if (top < min_max) {
                second_max = min_max;
                min_max = top;
                min_block = b;
            } else if (top < second_max) {
                second_max = top;
            }
        }
        std::vector<std::size_t> result;
        for (std::size_t v = lower ? *lower + 1 : 0; v < block_of.size(); ++v) {
            auto b = block_of[v];
            if (b == blocks_.size() || used[b]) continue;
            auto bound = b == min_block ? second_max : min_max;
            if (bound == none || v < bound) result.push_back(v);
        }
        return result;
    }

    std::vector<Label> labels_;
    std::vector<std::vector<std::size_t>> blocks_;
};

inline BasisEnumeration enumerate_bases(const Digraph& d, BasisKind kind) {
    return BasisEnumeration(d, kind);
}

/// Shrinks a reaching set to a basis: the least member of `a` in each
/// relevant initial component.
inline VertexSet minimize_reaching(const Digraph& d, BasisKind kind, const VertexSet& a) {
    auto missing = unreached(d, ReachingKind::of(kind), a);
    if (!missing.empty()) {
        throw SemanticError(std::string("set is not ") + to_string(kind) + "-reaching: '" +
                            *missing.begin() + "' is unreached");
    }
    auto c = condensation(d);
    std::vector<std::optional<std::size_t>> least(c.partition.count());
    for (auto v : indices_of(d, a)) {
        auto& slot = least[c.partition.component_of(v)];
        if (!slot || v < *slot) slot = v;
    }
    VertexSet result;
    for (auto k : detail::relevant_initial_components(d, c, kind)) {
        if (!least[k]) throw std::logic_error("reaching set misses an initial component");
        result.insert(d.label(*least[k]));
    }
    return result;
}

/// Whether the set of sources is point-reaching (checked definitionally).
inline bool sources_point_reaching(const Digraph& d) {
    return is_reaching(d, ReachingKind::point(), classify(d).sources);
}

/// Reaching and no single-element removal is reaching. Sufficient for
/// minimality because reaching sets are closed under supersets.
inline bool is_minimal_reaching(const Digraph& d, const ReachingKind& kind, const VertexSet& a) {
    if (!is_reaching(d, kind, a)) return false;
    for (const auto& v : a) {
        auto smaller = a;
        smaller.erase(v);
        if (is_reaching(d, kind, smaller)) return false;
    }
    return true;
}

/**
 * Given a point-basis `a`, a point-reaching set disjoint from it: the least
 * vertex outside `a` in each initial component. Absent when some initial
 * component has a single vertex (a source, or a lone vertex with a loop),
 * since that vertex belongs to every point-reaching set.
 */
inline std::optional<VertexSet> complement_reaching_witness(const Digraph& d, const VertexSet& a) {
    for (const auto& v : a) d.require(v);
    if (!is_minimal_reaching(d, ReachingKind::point(), a)) {
        throw SemanticError("set is not a point-basis");
    }
    auto c = condensation(d);
    VertexSet witness;
    for (auto k : initial_component_indices(c)) {
        std::optional<std::size_t> pick;
        for (auto v : c.partition.members(k)) {
            if (!a.contains(d.label(v))) {
                pick = v;
                break;
            }
        }
        if (!pick) return std::nullopt;
        witness.insert(d.label(*pick));
    }
    return witness;
}

/// True iff every one-vertex subset is an arc-basis: D has an arc (so the
/// empty set is not arc-reaching) and each {v} reaches every tail.
inline bool all_singletons_arc_bases(const Digraph& d) {
    if (d.arc_count() == 0) return false;
    for (const auto& v : d.labels()) {
        if (!is_reaching(d, ReachingKind::arc(), VertexSet{v})) return false;
    }
    return true;
}

struct TraceResult {
    ComponentId initial;
    std::vector<ComponentId> comp_path;
    std::vector<Label> vertex_path;
};

/**
 * Backward search from v's component to an initial component, lifted to a
 * dipath of D ending at v.
 *
 * The initial component is the nearest one in D* (fewest condensation arcs),
 * ties going to the least canonical label; the condensation path follows BFS
 * parents with in-neighbours scanned in ascending order.
 */
inline TraceResult trace_back(const Digraph& d, std::string_view v) {
    const auto target = d.require(v);
    auto c = condensation(d);
    const auto& dag = c.dag;
    const auto start = c.partition.component_of(target);

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(dag.order(), none);
    std::vector<bool> seen(dag.order(), false);
    std::vector<std::size_t> layer{start};
    seen[start] = true;
    std::size_t initial = none;
    while (initial == none) {
        for (auto k : layer) {
            if (dag.in(k).empty() && (initial == none || k < initial)) initial = k;
        }
        if (initial != none) break;
        std::vector<std::size_t> next;
        for (auto k : layer) {
            for (auto j : dag.in(k)) {
                if (!seen[j]) {
                    seen[j] = true;
                    parent[j] = k;
                    next.push_back(j);
                }
            }
        }
        if (next.empty()) throw std::logic_error("condensation has no source above component");
        layer = std::move(next);
    }

    std::vector<std::size_t> comps{initial};
    while (comps.back() != start) comps.push_back(parent[comps.back()]);

    auto path = detail::lift_path_indices(d, c, comps);
    if (path.back() != target) {
        auto tail = detail::shortest_path_within(d, c.partition, start, path.back(), target);
        path.insert(path.end(), tail.begin() + 1, tail.end());
    }

    TraceResult result;
    result.initial = dag.label(initial);
    for (auto k : comps) result.comp_path.push_back(dag.label(k));
    for (auto u : path) result.vertex_path.push_back(d.label(u));
    return result;
}

}  // namespace reachbase

#endif
