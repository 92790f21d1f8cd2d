#ifndef REACHBASE_DIGRAPH_HPP
#define REACHBASE_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reachbase/errors.hpp"

namespace reachbase {

/// Vertex label. Ordered bytewise (std::string comparison).
using Label = std::string;

/// A finite set of vertex labels, always iterated in lexicographic order.
using VertexSet = std::set<Label>;

/// An arc as (tail, head).
using Arc = std::pair<Label, Label>;

/// Labels are non-empty, whitespace-free, contain no '#' and are not the
/// reserved DEL keyword "node".
inline bool is_valid_label(std::string_view token) {
    if (token.empty() || token == "node") return false;
    return std::none_of(token.begin(), token.end(), [](char c) {
        return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
               c == '\f';
    });
}

inline void validate_label(std::string_view token, std::size_t line = 0) {
    if (!is_valid_label(token)) {
        throw InputError("malformed vertex label '" + std::string(token) + "'", line);
    }
}

enum class Direction { out, in };

/**
 * Immutable finite digraph.
 *
 * Vertices are stored sorted by label, so vertex indices follow
 * lexicographic label order. Arcs form a set; loops are allowed.
 * Adjacency lists are sorted by index.
 */
class Digraph {
   public:
    Digraph() = default;

    /// Vertex set is `vertices` plus every arc endpoint; duplicate arcs collapse.
    static Digraph build(const std::vector<Label>& vertices, const std::vector<Arc>& arcs) {
        std::vector<Label> labels;
        labels.reserve(vertices.size() + 2 * arcs.size());
        for (const auto& v : vertices) {
            validate_label(v);
            labels.push_back(v);
        }
        for (const auto& [tail, head] : arcs) {
            validate_label(tail);
            validate_label(head);
            labels.push_back(tail);
            labels.push_back(head);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        Digraph d;
        d.labels_ = std::move(labels);
        std::vector<std::pair<std::size_t, std::size_t>> index_arcs;
        index_arcs.reserve(arcs.size());
        for (const auto& [tail, head] : arcs) {
            index_arcs.emplace_back(*d.index_of(tail), *d.index_of(head));
        }
        d.set_arcs(std::move(index_arcs));
        return d;
    }

    /// Builds from already-valid sorted unique labels and index arcs.
    static Digraph from_indices(std::vector<Label> sorted_labels,
                                std::vector<std::pair<std::size_t, std::size_t>> arcs) {
        Digraph d;
        d.labels_ = std::move(sorted_labels);
        d.set_arcs(std::move(arcs));
        return d;
    }

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<Label>& labels() const noexcept { return labels_; }
    const Label& label(std::size_t v) const { return labels_.at(v); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool contains(std::string_view label) const { return index_of(label).has_value(); }

    /// Index of `label`, or DomainError.
    std::size_t require(std::string_view label) const {
        if (auto i = index_of(label)) return *i;
        throw DomainError("unknown vertex '" + std::string(label) + "'");
    }

    std::span<const std::size_t> out(std::size_t v) const { return out_.at(v); }
    std::span<const std::size_t> in(std::size_t v) const { return in_.at(v); }

    bool has_arc(std::size_t tail, std::size_t head) const {
        const auto& row = out_.at(tail);
        return std::binary_search(row.begin(), row.end(), head);
    }

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const {
        std::vector<Arc> result;
        result.reserve(arc_count_);
        for (std::size_t u = 0; u < order(); ++u) {
            for (auto v : out_[u]) result.emplace_back(labels_[u], labels_[v]);
        }
        return result;
    }

    VertexSet vertex_set() const { return VertexSet(labels_.begin(), labels_.end()); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.labels_ == b.labels_ && a.out_ == b.out_;
    }

   private:
    void set_arcs(std::vector<std::pair<std::size_t, std::size_t>> arcs) {
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        arc_count_ = arcs.size();
        out_.assign(labels_.size(), {});
        in_.assign(labels_.size(), {});
        for (auto [u, v] : arcs) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (auto& row : in_) std::sort(row.begin(), row.end());
    }

    std::vector<Label> labels_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::size_t arc_count_ = 0;
};

/// Convenience wrapper over Digraph::build.
inline Digraph build(const std::vector<Label>& vertices, const std::vector<Arc>& arcs) {
    return Digraph::build(vertices, arcs);
}

/// Membership mask over vertex indices.
using VertexMask = std::vector<bool>;

inline std::vector<std::size_t> indices_of(const Digraph& d, const VertexSet& s) {
    std::vector<std::size_t> result;
    result.reserve(s.size());
    for (const auto& label : s) result.push_back(d.require(label));
    return result;
}

inline VertexSet labels_of(const Digraph& d, const VertexMask& mask) {
    VertexSet result;
    for (std::size_t v = 0; v < mask.size(); ++v) {
        if (mask[v]) result.insert(result.end(), d.label(v));
    }
    return result;
}

/// Breadth-first closure from `seeds` along the given direction.
inline VertexMask reach_mask(const Digraph& d, std::span<const std::size_t> seeds,
                             Direction dir = Direction::out) {
    VertexMask seen(d.order(), false);
    std::deque<std::size_t> queue;
    for (auto s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : dir == Direction::out ? d.out(u) : d.in(u)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

inline VertexSet neighbors(const Digraph& d, std::string_view u, Direction dir) {
    auto i = d.require(u);
    VertexSet result;
    for (auto w : dir == Direction::out ? d.out(i) : d.in(i)) {
        result.insert(result.end(), d.label(w));
    }
    return result;
}

/// R(S): every vertex with a diwalk (possibly of length 0) from some member of S.
inline VertexSet reach(const Digraph& d, const VertexSet& s) {
    auto seeds = indices_of(d, s);
    return labels_of(d, reach_mask(d, seeds));
}

/// R'(u): every vertex from which u is reachable.
inline VertexSet shadow(const Digraph& d, std::string_view u) {
    std::size_t seed = d.require(u);
    return labels_of(d, reach_mask(d, std::span<const std::size_t>(&seed, 1), Direction::in));
}

inline Digraph converse(const Digraph& d) {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    arcs.reserve(d.arc_count());
    for (std::size_t u = 0; u < d.order(); ++u) {
        for (auto v : d.out(u)) arcs.emplace_back(v, u);
    }
    return Digraph::from_indices(d.labels(), std::move(arcs));
}

struct DegreeClasses {
    VertexSet sources;
    VertexSet sinks;
    VertexSet isolates;

    friend bool operator==(const DegreeClasses&, const DegreeClasses&) = default;
};

inline bool is_source(const Digraph& d, std::size_t v) { return d.in(v).empty(); }
inline bool is_sink(const Digraph& d, std::size_t v) { return d.out(v).empty(); }
inline bool is_isolate(const Digraph& d, std::size_t v) { return is_source(d, v) && is_sink(d, v); }

inline DegreeClasses classify(const Digraph& d) {
    DegreeClasses c;
    for (std::size_t v = 0; v < d.order(); ++v) {
        if (is_source(d, v)) c.sources.insert(c.sources.end(), d.label(v));
        if (is_sink(d, v)) c.sinks.insert(c.sinks.end(), d.label(v));
        if (is_isolate(d, v)) c.isolates.insert(c.isolates.end(), d.label(v));
    }
    return c;
}

/// Subdigraph induced on the vertices where `keep` is true.
inline Digraph induced(const Digraph& d, const VertexMask& keep) {
    std::vector<std::size_t> renumber(d.order(), 0);
    std::vector<Label> labels;
    for (std::size_t v = 0; v < d.order(); ++v) {
        if (keep[v]) {
            renumber[v] = labels.size();
            labels.push_back(d.label(v));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t u = 0; u < d.order(); ++u) {
        if (!keep[u]) continue;
        for (auto v : d.out(u)) {
            if (keep[v]) arcs.emplace_back(renumber[u], renumber[v]);
        }
    }
    return Digraph::from_indices(std::move(labels), std::move(arcs));
}

enum class StripMode { isolates, sinks };

/// D with all isolates (D⁰) or all sinks (D⁻) removed. One pass only: vertices
/// that become sinks after the removal stay.
inline Digraph strip(const Digraph& d, StripMode mode) {
    VertexMask keep(d.order(), true);
    for (std::size_t v = 0; v < d.order(); ++v) {
        keep[v] = mode == StripMode::isolates ? !is_isolate(d, v) : !is_sink(d, v);
    }
    return induced(d, keep);
}

/// T(D): tails of arcs, i.e. vertices of out-degree at least one.
inline VertexSet tails(const Digraph& d) {
    VertexSet result;
    for (std::size_t v = 0; v < d.order(); ++v) {
        if (!is_sink(d, v)) result.insert(result.end(), d.label(v));
    }
    return result;
}

}  // namespace reachbase

#endif
