#ifndef REACHBASE_SCC_HPP
#define REACHBASE_SCC_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"

namespace reachbase {

/// A strong component is named by its lexicographically least member.
using ComponentId = Label;

/**
 * Partition of a digraph's vertices into strong components.
 *
 * Components are numbered in order of their least member, so component
 * index order coincides with canonical-label order.
 */
class Partition {
   public:
    Partition() = default;
    Partition(std::vector<std::size_t> component_of, std::vector<std::vector<std::size_t>> members)
        : component_of_(std::move(component_of)), members_(std::move(members)) {}

    std::size_t count() const noexcept { return members_.size(); }
    std::size_t component_of(std::size_t v) const { return component_of_.at(v); }
    std::span<const std::size_t> members(std::size_t c) const { return members_.at(c); }
    std::size_t canonical(std::size_t c) const { return members_.at(c).front(); }

    /// Canonical label -> member labels.
    std::map<ComponentId, VertexSet> by_label(const Digraph& d) const {
        std::map<ComponentId, VertexSet> result;
        for (std::size_t c = 0; c < count(); ++c) {
            VertexSet m;
            for (auto v : members_[c]) m.insert(m.end(), d.label(v));
            result.emplace(d.label(canonical(c)), std::move(m));
        }
        return result;
    }

   private:
    std::vector<std::size_t> component_of_;
    std::vector<std::vector<std::size_t>> members_;
};

/// Tarjan's algorithm, iterative so deep chains do not exhaust the stack.
inline Partition strong_components(const Digraph& d) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = d.order();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> found;
    std::size_t next_index = 0;

    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& frame = call.back();
            const auto succ = d.out(frame.v);
            if (frame.edge < succ.size()) {
                auto w = succ[frame.edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[frame.v] = std::min(low[frame.v], index[w]);
                }
                continue;
            }
            const auto v = frame.v;
            if (low[v] == index[v]) {
                std::vector<std::size_t> component;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                found.push_back(std::move(component));
            }
            call.pop_back();
            if (!call.empty()) {
                auto parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<std::size_t> component_of(n, 0);
    for (std::size_t c = 0; c < found.size(); ++c) {
        for (auto v : found[c]) component_of[v] = c;
    }
    return Partition(std::move(component_of), std::move(found));
}

/// D*: one vertex per strong component (labelled by its canonical member),
/// an arc between distinct components joined by some arc of D, and no loops.
/// dag vertex index c is component index c of `partition`.
struct Condensation {
    Digraph dag;
    Partition partition;
};

inline Condensation condensation(const Digraph& d) {
    auto partition = strong_components(d);
    std::vector<Label> labels;
    labels.reserve(partition.count());
    for (std::size_t c = 0; c < partition.count(); ++c) labels.push_back(d.label(partition.canonical(c)));

    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t u = 0; u < d.order(); ++u) {
        for (auto v : d.out(u)) {
            auto cu = partition.component_of(u), cv = partition.component_of(v);
            if (cu != cv) arcs.emplace_back(cu, cv);
        }
    }
    return {Digraph::from_indices(std::move(labels), std::move(arcs)), std::move(partition)};
}

/// S*: canonical names of the components that meet S.
inline VertexSet condense_set(const Digraph& d, const Partition& p, const VertexSet& s) {
    VertexSet result;
    for (auto v : indices_of(d, s)) result.insert(d.label(p.canonical(p.component_of(v))));
    return result;
}

inline VertexSet condense_set(const Digraph& d, const VertexSet& s) {
    return condense_set(d, strong_components(d), s);
}

/// Component indices with no entering arc, ascending.
inline std::vector<std::size_t> initial_component_indices(const Condensation& c) {
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < c.dag.order(); ++k) {
        if (c.dag.in(k).empty()) result.push_back(k);
    }
    return result;
}

inline VertexSet initial_components(const Digraph& d) {
    auto c = condensation(d);
    VertexSet result;
    for (auto k : initial_component_indices(c)) result.insert(result.end(), c.dag.label(k));
    return result;
}

namespace detail {

/// Shortest dipath from `from` to `to` using only vertices of component
/// `comp`; among shortest paths the lexicographically least vertex sequence.
inline std::vector<std::size_t> shortest_path_within(const Digraph& d, const Partition& p,
                                                     std::size_t comp, std::size_t from,
                                                     std::size_t to) {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(d.order(), inf);
    std::deque<std::size_t> queue{to};
    dist[to] = 0;
    while (!queue.empty() && dist[from] == inf) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : d.in(u)) {
            if (dist[w] == inf && p.component_of(w) == comp) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist[from] == inf) throw DomainError("no dipath inside component");

    // Greedy walk: out-lists are sorted, so the first neighbour one step
    // closer gives the least continuation.
    std::vector<std::size_t> path{from};
    for (auto u = from; u != to;) {
        for (auto w : d.out(u)) {
            if (dist[w] != inf && dist[w] + 1 == dist[u]) {
                u = w;
                break;
            }
        }
        path.push_back(u);
    }
    return path;
}

inline std::vector<std::size_t> lift_path_indices(const Digraph& d, const Condensation& c,
                                                  const std::vector<std::size_t>& comp_path) {
    if (comp_path.empty()) throw DomainError("empty component path");
    for (std::size_t i = 0; i + 1 < comp_path.size(); ++i) {
        if (!c.dag.has_arc(comp_path[i], comp_path[i + 1])) {
            throw DomainError("component path is not a dipath in the condensation: no arc " +
                              c.dag.label(comp_path[i]) + " -> " + c.dag.label(comp_path[i + 1]));
        }
    }
    const auto& p = c.partition;
    if (comp_path.size() == 1) return {p.canonical(comp_path.front())};

    // Least connecting arc between each consecutive pair. Tails are scanned in
    // ascending order and out-lists are sorted, so the first hit is least.
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t i = 0; i + 1 < comp_path.size(); ++i) {
        bool found = false;
        for (auto u : p.members(comp_path[i])) {
            for (auto w : d.out(u)) {
                if (p.component_of(w) == comp_path[i + 1]) {
                    links.emplace_back(u, w);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }

    std::vector<std::size_t> path{links.front().first};
    for (std::size_t i = 0; i + 1 < links.size(); ++i) {
        auto inner = shortest_path_within(d, p, comp_path[i + 1], links[i].second, links[i + 1].first);
        path.insert(path.end(), inner.begin(), inner.end());
    }
    path.push_back(links.back().second);
    return path;
}

}  // namespace detail

/// Realizes a dipath of D* as a dipath of D: the least connecting arc between
/// consecutive components and the shortest (then lexicographically least)
/// dipath inside each intermediate component.
inline std::vector<Label> lift_path(const Digraph& d, const std::vector<ComponentId>& comp_path) {
    auto c = condensation(d);
    std::vector<std::size_t> comps;
    comps.reserve(comp_path.size());
    for (const auto& id : comp_path) {
        auto k = c.dag.index_of(id);
        if (!k) throw DomainError("'" + id + "' does not name a strong component");
        comps.push_back(*k);
    }
    std::vector<Label> result;
    for (auto v : detail::lift_path_indices(d, c, comps)) result.push_back(d.label(v));
    return result;
}

}  // namespace reachbase

#endif
