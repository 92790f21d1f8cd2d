#ifndef REACHBASE_DEL_FORMAT_HPP
#define REACHBASE_DEL_FORMAT_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"

// DEL (digraph edge list), one declaration per line:
//
//   # comment to end of line
//   node <label>        vertex (may be isolated)
//   <tail> <head>       arc; both endpoints are declared implicitly
//
// Blank lines are ignored. Tokens are separated by blanks or tabs.

namespace reachbase::del {

inline Digraph parse(std::istream& in) {
    std::vector<Label> vertices;
    std::vector<Arc> arcs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(std::move(w));
        if (words.empty()) continue;
        if (words.size() != 2) {
            throw InputError("expected 'node <label>' or '<tail> <head>', got " +
                                 std::to_string(words.size()) + " token(s)",
                             line_no);
        }
        if (words[0] == "node") {
            validate_label(words[1], line_no);
            vertices.push_back(std::move(words[1]));
        } else {
            validate_label(words[0], line_no);
            validate_label(words[1], line_no);
            arcs.emplace_back(std::move(words[0]), std::move(words[1]));
        }
    }
    return Digraph::build(vertices, arcs);
}

inline Digraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

/// Canonical text: `node` lines for vertices on no arc, then arcs, both sorted.
inline std::string write(const Digraph& d) {
    std::string out;
    std::vector<bool> on_arc(d.order(), false);
    for (std::size_t u = 0; u < d.order(); ++u) {
        for (auto v : d.out(u)) on_arc[u] = on_arc[v] = true;
    }
    for (std::size_t v = 0; v < d.order(); ++v) {
        if (!on_arc[v]) out += "node " + d.label(v) + "\n";
    }
    for (const auto& [tail, head] : d.arcs()) out += tail + " " + head + "\n";
    return out;
}

}  // namespace reachbase::del

#endif
