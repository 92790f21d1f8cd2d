#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "reachbase/cli.hpp"
#include "reachbase/del_format.hpp"
#include "reachbase/families.hpp"
#include "support/graphs.hpp"

using namespace reachbase;
namespace t = reachbase::testing;

namespace {

cli::RunResult run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    return cli::run(args, in);
}

const std::string chain_del = "a b\nb c\n";
const std::string cyc_del = "a b\nb a\nb c\n";

}  // namespace

TEST(DelParse, CommentsBlankLinesAndNodes) {
    auto d = del::parse(std::string("# header\n\nnode iso   # isolated\n  a\tb  \nb c # tail comment\r\n"));
    EXPECT_EQ(d, build({"iso"}, {{"a", "b"}, {"b", "c"}}));
}

TEST(DelParse, ErrorsCarryLineNumbers) {
    try {
        del::parse(std::string("a b\n\nx\n"));
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        del::parse(std::string("a b\nnode node\n"));
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(del::parse(std::string("a node\n")), InputError);
    EXPECT_THROW(del::parse(std::string("node\n")), InputError);
    EXPECT_THROW(del::parse(std::string("a b c\n")), InputError);
}

TEST(DelWrite, NodeLinesOnlyForVerticesOffArcs) {
    auto d = build({"iso", "a"}, {{"a", "b"}, {"v", "v"}});
    EXPECT_EQ(del::write(d), "node iso\na b\nv v\n");
    EXPECT_EQ(del::write(build({}, {})), "");
}

TEST(DelProperties, RoundTripIsIdentity) {
    std::mt19937_64 rng(0x5eed05);
    for (int iter = 0; iter < 300; ++iter) {
        auto d = t::random_digraph(rng, 10);
        auto text = del::write(d);
        EXPECT_EQ(del::parse(text), d);
        EXPECT_EQ(del::write(del::parse(text)), text);
    }
    for (auto f : {families::Family::ex9, families::Family::ex11, families::Family::ex12}) {
        auto d = families::generate({f, 5});
        EXPECT_EQ(del::parse(del::write(d)), d);
    }
}

TEST(Cli, CheckVerdictsAndExitCodes) {
    auto yes = run({"check", "--kind", "point", "--set", "a"}, chain_del);
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_TRUE(nlohmann::json::parse(yes.out)["reaching"].get<bool>());

    auto no = run({"check", "--kind", "point", "--set", "b"}, chain_del);
    EXPECT_EQ(no.exit_code, 1);
    auto doc = nlohmann::json::parse(no.out);
    EXPECT_FALSE(doc["reaching"].get<bool>());
    EXPECT_EQ(doc["unreached"], nlohmann::json::array({"a"}));

    auto empty_set = run({"check", "--kind", "arc", "--set", ""}, "node u\nnode v\n");
    EXPECT_EQ(empty_set.exit_code, 0);
}

TEST(Cli, PointBasisOnCyc) {
    auto r = run({"point-basis"}, cyc_del);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["basis"], nlohmann::json::array({"a"}));
}

TEST(Cli, ErrorClasses) {
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"info", "extra"}, chain_del).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({"bases", "--kind", "both"}, chain_del).exit_code, 2);
    EXPECT_EQ(run({"check", "--kind", "point", "--targets", "a"}, chain_del).exit_code, 2);
    EXPECT_EQ(run({"info"}, "a b c\n").exit_code, 3);
    EXPECT_EQ(run({"info", "--input", "/nonexistent/file.del"}).exit_code, 3);
    EXPECT_EQ(run({"minimize", "--kind", "point", "--set", "b"}, chain_del).exit_code, 4);
    EXPECT_EQ(run({"trace-back", "--vertex", "q"}, chain_del).exit_code, 4);
    EXPECT_EQ(run({"oracle", "--cap", "2"}, chain_del).exit_code, 4);
    EXPECT_EQ(run({"oracle", "--targets", "zz"}, chain_del).exit_code, 4);
}

TEST(Cli, HelpIsNotAnError) {
    auto r = run({"--help"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("witness-complement"), std::string::npos);
}

TEST(Cli, ReadsInputFile) {
    auto path = ::testing::TempDir() + "reachbase_cli_input.del";
    std::ofstream(path) << cyc_del;
    auto from_file = run({"info", "--input", path});
    auto from_stdin = run({"info"}, cyc_del);
    EXPECT_EQ(from_file.exit_code, 0);
    EXPECT_EQ(from_file.out, from_stdin.out);
    std::remove(path.c_str());
}

TEST(Cli, OracleEmptyTargetsDiffersFromDefault) {
    auto all = nlohmann::json::parse(run({"oracle"}, cyc_del).out);
    EXPECT_EQ(all["minimal_sets"], nlohmann::json::parse(R"([["a"],["b"]])"));
    auto none = nlohmann::json::parse(run({"oracle", "--targets", ""}, cyc_del).out);
    EXPECT_EQ(none["minimal_sets"], nlohmann::json::parse("[[]]"));
}

TEST(Cli, ExampleRoundTripsThroughParser) {
    auto r = run({"example", "--name", "EX10", "--n", "2"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(del::parse(r.out), families::generate({families::Family::ex10, 2}));
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::vector<std::string>> verbs = {
        {"info"}, {"scc"}, {"bases", "--kind", "arc"}, {"oracle"}, {"trace-back", "--vertex", "c"}};
    for (const auto& args : verbs) {
        auto first = run(args, cyc_del);
        auto second = run(args, cyc_del);
        EXPECT_EQ(first.out, second.out);
        EXPECT_EQ(first.exit_code, second.exit_code);
    }
}
