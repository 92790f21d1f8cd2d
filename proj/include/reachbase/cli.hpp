#ifndef REACHBASE_CLI_HPP
#define REACHBASE_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reachbase/bases.hpp"
#include "reachbase/del_format.hpp"
#include "reachbase/digraph.hpp"
#include "reachbase/errors.hpp"
#include "reachbase/families.hpp"
#include "reachbase/oracle.hpp"
#include "reachbase/scc.hpp"

namespace reachbase::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_false = 1,
    exit_usage = 2,
    exit_parse = 3,
    exit_semantic = 4,
};

struct RunResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

namespace detail {

using nlohmann::json;

struct Options {
    std::string input;
    bool plain = false;
    std::string kind;
    std::string set;
    std::string targets;
    bool targets_given = false;
    bool count_only = false;
    bool list = false;
    std::size_t limit = 100;
    std::string vertex;
    std::string name;
    std::size_t n = 0;
    std::size_t ceiling = families::default_ceiling;
    std::size_t cap = oracle::max_cap;
};

inline VertexSet split_set(const std::string& text) {
    VertexSet result;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) result.insert(token);
    }
    return result;
}

inline json to_json(const VertexSet& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

inline BasisKind basis_kind(const std::string& k) { return k == "arc" ? BasisKind::arc : BasisKind::point; }

inline std::string render_scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

inline std::string render_inline(const json& v) {
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ",") + render_inline(e);
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + render_inline(e);
        return s;
    }
    return render_scalar(v);
}

/// Line-oriented rendering of a flat JSON report.
inline std::string render_plain(const json& doc) {
    std::string out;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_array()) {
            out += key + ": " + render_scalar(value) + "\n";
            continue;
        }
        const bool nested = std::any_of(value.begin(), value.end(),
                                        [](const json& e) { return e.is_array() || e.is_object(); });
        if (!nested) {
            out += key + ":";
            for (const auto& e : value) out += " " + render_scalar(e);
            out += "\n";
            continue;
        }
        out += key + ":\n";
        for (const auto& e : value) {
            if (e.is_array()) {
                std::string line;
                for (const auto& x : e) line += (line.empty() ? "" : " ") + render_scalar(x);
                out += "  " + (line.empty() ? std::string("(empty)") : line) + "\n";
            } else {
                out += "  " + render_inline(e) + "\n";
            }
        }
    }
    return out;
}

inline Digraph read_input(const Options& o, std::istream& stdin_stream) {
    if (o.input.empty() || o.input == "-") return del::parse(stdin_stream);
    std::ifstream file(o.input);
    if (!file) throw InputError("cannot open input file '" + o.input + "'");
    return del::parse(file);
}

inline json info(const Digraph& d) {
    auto classes = classify(d);
    auto c = condensation(d);
    return {{"vertex_count", d.order()},
            {"arc_count", d.arc_count()},
            {"component_count", c.partition.count()},
            {"initial_components", to_json(initial_components(d))},
            {"sources", to_json(classes.sources)},
            {"sinks", to_json(classes.sinks)},
            {"isolates", to_json(classes.isolates)}};
}

inline json scc(const Digraph& d) {
    json components = json::array();
    for (const auto& [id, members] : strong_components(d).by_label(d)) {
        components.push_back({{"id", id}, {"members", to_json(members)}});
    }
    return {{"component_count", components.size()}, {"components", components}};
}

inline json one_basis(const Digraph& d, BasisKind kind) {
    auto b = basis(d, kind);
    return {{"kind", to_string(kind)}, {"basis", to_json(b)}, {"size", b.size()}};
}

inline json bases(const Digraph& d, const Options& o) {
    auto kind = basis_kind(o.kind);
    auto e = enumerate_bases(d, kind);
    json doc = {{"kind", to_string(kind)},
                {"count", e.count().str()},
                {"basis_size", e.basis_size()}};
    if (o.count_only) return doc;
    json listed = json::array();
    for (const auto& s : e.take(o.limit)) listed.push_back(to_json(s));
    doc["truncated"] = e.count() > listed.size();
    doc["listed"] = listed.size();
    doc["bases"] = std::move(listed);
    return doc;
}

inline ReachingKind reaching_kind(const Options& o) {
    if (o.kind == "target") return ReachingKind::target(split_set(o.targets));
    return ReachingKind::of(basis_kind(o.kind));
}

inline json check(const Digraph& d, const Options& o) {
    auto kind = reaching_kind(o);
    auto a = split_set(o.set);
    auto missing = unreached(d, kind, a);
    json doc = {{"kind", o.kind},
                {"set", to_json(a)},
                {"reaching", missing.empty()},
                {"unreached", to_json(missing)}};
    if (kind.tag() == ReachingKind::Tag::target) doc["targets"] = to_json(kind.targets());
    return doc;
}

inline json minimize(const Digraph& d, const Options& o) {
    auto kind = basis_kind(o.kind);
    auto a = split_set(o.set);
    auto b = minimize_reaching(d, kind, a);
    return {{"kind", to_string(kind)}, {"input", to_json(a)}, {"basis", to_json(b)}};
}

inline json witness(const Digraph& d, const Options& o) {
    auto a = split_set(o.set);
    auto w = complement_reaching_witness(d, a);
    return {{"basis", to_json(a)},
            {"sources", to_json(classify(d).sources)},
            {"witness", w ? to_json(*w) : json(nullptr)}};
}

inline json trace(const Digraph& d, const Options& o) {
    auto t = trace_back(d, o.vertex);
    return {{"vertex", o.vertex},
            {"initial", t.initial},
            {"component_path", t.comp_path},
            {"vertex_path", t.vertex_path}};
}

inline json run_oracle(const Digraph& d, const Options& o) {
    auto targets = o.targets_given ? split_set(o.targets) : d.vertex_set();
    auto r = oracle::minimal_reaching_sets(d, targets, o.cap);
    json sets = json::array();
    for (const auto& s : r.minimal_sets) sets.push_back(to_json(s));
    return {{"targets", to_json(targets)},
            {"universe_size", r.universe_size},
            {"count", r.minimal_sets.size()},
            {"minimal_sets", sets}};
}

inline std::string example(const Options& o) {
    auto family = families::parse_family(o.name);
    families::FamilySpec spec{*family, o.n};
    auto d = families::generate(spec, o.ceiling);
    return "# " + o.name + " n=" + std::to_string(o.n) + "\n" + del::write(d);
}

inline std::string emit(const json& doc, const Options& o) {
    if (o.plain) return render_plain(doc);
    return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

}  // namespace detail

/**
 * Runs one CLI invocation. `args` excludes the program name. Digraph input is
 * read from `--input <path>` or else from `stdin_stream`.
 *
 * Exit codes: 0 success, 1 negative `check` verdict, 2 usage error, 3 input
 * parse error, 4 semantic error (unknown vertex, non-reaching set, capacity).
 */
inline RunResult run(const std::vector<std::string>& args, std::istream& stdin_stream) {
    using detail::Options;
    Options o;
    CLI::App app{"Point- and arc-reaching sets of digraphs", "reachbase"};
    app.require_subcommand(1, 1);

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "DEL file to read (default: standard input)");
        return sub;
    };
    auto with_plain = [&](CLI::App* sub) {
        sub->add_flag("--plain", o.plain, "Plain-text output instead of JSON");
        return sub;
    };
    auto kind_option = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--kind", o.kind, "Reaching kind")->required()->check(CLI::IsMember(allowed));
    };

    auto* info = with_plain(with_input(app.add_subcommand("info", "Counts and degree classes")));
    auto* scc = with_plain(with_input(app.add_subcommand("scc", "Strong components")));
    auto* condense = with_input(app.add_subcommand("condense", "Emit the condensation as DEL"));
    auto* point_basis = with_plain(with_input(app.add_subcommand("point-basis", "Canonical point-basis")));
    auto* arc_basis = with_plain(with_input(app.add_subcommand("arc-basis", "Canonical arc-basis")));

    auto* bases = with_plain(with_input(app.add_subcommand("bases", "Count or list all bases")));
    kind_option(bases, {"point", "arc"});
    auto* count_flag = bases->add_flag("--count", o.count_only, "Only report the number of bases");
    auto* list_flag = bases->add_flag("--list", o.list, "List bases (default)");
    count_flag->excludes(list_flag);
    bases->add_option("--limit", o.limit, "Maximum number of bases to list")->check(CLI::NonNegativeNumber);

    auto* check = with_plain(with_input(app.add_subcommand("check", "Test whether a set is reaching")));
    kind_option(check, {"point", "arc", "target"});
    check->add_option("--set", o.set, "Comma-separated vertex set");
    auto* targets_opt = check->add_option("--targets", o.targets, "Comma-separated targets (target kind)");

    auto* minimize = with_plain(with_input(app.add_subcommand("minimize", "Shrink a reaching set to a basis")));
    kind_option(minimize, {"point", "arc"});
    minimize->add_option("--set", o.set, "Comma-separated vertex set")->required();

    auto* witness = with_plain(with_input(
        app.add_subcommand("witness-complement", "Point-reaching set disjoint from a point-basis")));
    witness->add_option("--set", o.set, "The point-basis")->required();

    auto* singletons = with_plain(with_input(
        app.add_subcommand("singletons", "Whether every single vertex is an arc-basis")));

    auto* trace = with_plain(with_input(app.add_subcommand("trace-back", "Dipath from an initial component")));
    trace->add_option("--vertex", o.vertex, "Destination vertex")->required();

    auto* oracle_cmd = with_plain(with_input(app.add_subcommand("oracle", "Brute-force minimal reaching sets")));
    auto* oracle_targets = oracle_cmd->add_option("--targets", o.targets, "Comma-separated targets (default: all vertices)");
    oracle_cmd->add_option("--cap", o.cap, "Refuse digraphs with more vertices than this (at most 16)");

    auto* example = app.add_subcommand("example", "Emit a family truncation as DEL");
    example->add_option("--name", o.name, "Family")
        ->required()
        ->check(CLI::IsMember({"EX8", "EX8C", "EX9", "EX10", "EX11", "EX12"}));
    example->add_option("--n", o.n, "Truncation parameter")->required()->check(CLI::NonNegativeNumber);
    example->add_option("--ceiling", o.ceiling, "Maximum vertex count of the truncation");

    RunResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        o.targets_given = targets_opt->count() != 0 || oracle_targets->count() != 0;
        if (check->parsed() && o.kind == "target" && targets_opt->count() == 0) {
            throw CLI::RequiredError("--targets (with --kind target)");
        }
        if (check->parsed() && o.kind != "target" && targets_opt->count() != 0) {
            throw CLI::ValidationError("--targets", "only valid with --kind target");
        }
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? exit_ok : exit_usage;
        return result;
    }

    try {
        if (example->parsed()) {
            result.out = detail::example(o);
            return result;
        }
        auto d = detail::read_input(o, stdin_stream);
        if (condense->parsed()) {
            result.out = del::write(condensation(d).dag);
            return result;
        }
        nlohmann::json doc;
        if (info->parsed()) doc = detail::info(d);
        else if (scc->parsed()) doc = detail::scc(d);
        else if (point_basis->parsed()) doc = detail::one_basis(d, BasisKind::point);
        else if (arc_basis->parsed()) doc = detail::one_basis(d, BasisKind::arc);
        else if (bases->parsed()) doc = detail::bases(d, o);
        else if (check->parsed()) doc = detail::check(d, o);
        else if (minimize->parsed()) doc = detail::minimize(d, o);
        else if (witness->parsed()) doc = detail::witness(d, o);
        else if (singletons->parsed()) doc = {{"all_singletons_arc_bases", all_singletons_arc_bases(d)}};
        else if (trace->parsed()) doc = detail::trace(d, o);
        else if (oracle_cmd->parsed()) doc = detail::run_oracle(d, o);
        result.out = detail::emit(doc, o);
        if (check->parsed() && !doc["reaching"].get<bool>()) result.exit_code = exit_false;
    } catch (const InputError& e) {
        result.exit_code = exit_parse;
        result.err = std::string("parse error: ") + e.what() + "\n";
    } catch (const DomainError& e) {
        result.exit_code = exit_semantic;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const SemanticError& e) {
        result.exit_code = exit_semantic;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const CapacityError& e) {
        result.exit_code = exit_semantic;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace reachbase::cli

#endif
