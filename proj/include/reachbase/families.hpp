#ifndef REACHBASE_FAMILIES_HPP
#define REACHBASE_FAMILIES_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"

// Finite truncations of infinite example digraphs. Each keeps the n+1
// lowest-index vertices of every rail (depth <= n for the binary tree) and
// all arcs among them.

namespace reachbase::families {

enum class Family { ex8, ex8c, ex9, ex10, ex11, ex12 };

struct FamilySpec {
    Family name;
    std::size_t n;
};

inline constexpr std::size_t default_ceiling = 10000;

/// Label of the empty binary string in EX9 (labels cannot be empty).
inline constexpr std::string_view ex9_root = "eps";

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::ex8: return "EX8";
        case Family::ex8c: return "EX8C";
        case Family::ex9: return "EX9";
        case Family::ex10: return "EX10";
        case Family::ex11: return "EX11";
        case Family::ex12: return "EX12";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (auto f : {Family::ex8, Family::ex8c, Family::ex9, Family::ex10, Family::ex11, Family::ex12}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

/// Vertex count of the truncation, saturating at SIZE_MAX.
inline std::size_t vertex_count(const FamilySpec& spec) {
    constexpr auto max = std::numeric_limits<std::size_t>::max();
    const auto n = spec.n;
    switch (spec.name) {
        case Family::ex8:
        case Family::ex8c:
            return n == max ? max : n + 1;
        case Family::ex10:
        case Family::ex11:
            return n >= max / 2 - 1 ? max : 2 * (n + 1);
        case Family::ex9:
            return n >= std::numeric_limits<std::size_t>::digits - 1 ? max
                                                                     : (std::size_t{2} << n) - 1;
        case Family::ex12:
            // 1 + sum_{i=1..n} (i + 1)
            if (n > (std::size_t{1} << 31)) return max;
            return 1 + n * (n + 3) / 2;
    }
    return max;
}

namespace detail {

inline std::string y(std::size_t i) { return "y" + std::to_string(i); }
inline std::string z(std::size_t i) { return "z" + std::to_string(i); }
inline std::string u(std::size_t i, std::size_t k) {
    return "u" + std::to_string(i) + "_" + std::to_string(k);
}

inline std::string binary_label(const std::string& bits) {
    return bits.empty() ? std::string(ex9_root) : bits;
}

}  // namespace detail

inline void check_ceiling(const FamilySpec& spec, std::size_t ceiling) {
    const auto count = vertex_count(spec);
    if (count > ceiling) {
        throw CapacityError(std::string(to_string(spec.name)) + " with n=" + std::to_string(spec.n) +
                            " has " +
                            (count == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                              : std::to_string(count)) +
                            " vertices, over the ceiling of " + std::to_string(ceiling));
    }
}

inline Digraph generate(const FamilySpec& spec, std::size_t ceiling = default_ceiling) {
    using detail::u;
    using detail::y;
    using detail::z;
    check_ceiling(spec, ceiling);
    const auto n = spec.n;
    std::vector<Label> vertices;
    std::vector<Arc> arcs;
    switch (spec.name) {
        case Family::ex8:
        case Family::ex8c:
            for (std::size_t i = 0; i <= n; ++i) vertices.push_back(y(i));
            for (std::size_t i = 0; i < n; ++i) {
                if (spec.name == Family::ex8) {
                    arcs.emplace_back(y(i + 1), y(i));
                } else {
                    arcs.emplace_back(y(i), y(i + 1));
                }
            }
            break;
        case Family::ex9: {
            std::vector<std::string> level{""};
            vertices.push_back(detail::binary_label(""));
            for (std::size_t depth = 1; depth <= n; ++depth) {
                std::vector<std::string> next;
                next.reserve(level.size() * 2);
                for (const auto& prefix : level) {
                    for (char bit : {'0', '1'}) {
                        auto child = prefix + bit;
                        vertices.push_back(child);
                        arcs.emplace_back(child, detail::binary_label(prefix));
                        next.push_back(std::move(child));
                    }
                }
                level = std::move(next);
            }
            break;
        }
        case Family::ex10:
            for (std::size_t i = 0; i <= n; ++i) {
                arcs.emplace_back(y(i), z(i));
                arcs.emplace_back(z(i), y(i));
            }
            for (std::size_t i = 0; i < n; ++i) {
                arcs.emplace_back(y(i + 1), y(i));
                arcs.emplace_back(z(i + 1), z(i));
            }
            break;
        case Family::ex11:
            for (std::size_t i = 0; i <= n; ++i) {
                vertices.push_back(y(i));
                vertices.push_back(z(i));
            }
            for (std::size_t i = 0; i < n; ++i) {
                arcs.emplace_back(y(i + 1), y(i));
                arcs.emplace_back(z(i + 1), y(i));
            }
            break;
        case Family::ex12:
            vertices.push_back("u");
            for (std::size_t i = 1; i <= n; ++i) {
                arcs.emplace_back(u(i, 0), "u");
                for (std::size_t k = 1; k <= i; ++k) arcs.emplace_back(u(i, k), u(i, k - 1));
            }
            break;
    }
    return Digraph::build(vertices, arcs);
}

/**
 * The known unique point-basis of a truncation. EX10 truncations have two
 * ({y_n} and {z_n}), so asking for EX10 is a SemanticError.
 */
inline VertexSet expected_point_basis(const FamilySpec& spec, std::size_t ceiling = default_ceiling) {
    check_ceiling(spec, ceiling);
    using detail::u;
    using detail::y;
    using detail::z;
    const auto n = spec.n;
    VertexSet basis;
    switch (spec.name) {
        case Family::ex8:
            basis.insert(y(n));
            break;
        case Family::ex8c:
            basis.insert(y(0));
            break;
        case Family::ex9: {
            // Every leaf of the depth-n tree.
            const auto leaves = vertex_count({Family::ex9, n}) / 2 + 1;
            for (std::size_t code = 0; code < leaves; ++code) {
                std::string bits(n, '0');
                for (std::size_t b = 0; b < n; ++b) {
                    if (code >> (n - 1 - b) & 1) bits[b] = '1';
                }
                basis.insert(detail::binary_label(bits));
            }
            break;
        }
        case Family::ex10:
            throw SemanticError("non-unique basis: EX10 truncations have 2 point-bases");
        case Family::ex11:
            basis.insert(y(n));
            for (std::size_t i = 0; i <= n; ++i) basis.insert(z(i));
            break;
        case Family::ex12:
            // With no paths the hub u is an isolate and forms the basis alone.
            if (n == 0) basis.insert("u");
            for (std::size_t i = 1; i <= n; ++i) basis.insert(u(i, i));
            break;
    }
    return basis;
}

}  // namespace reachbase::families

#endif
