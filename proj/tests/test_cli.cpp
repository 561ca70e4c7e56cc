#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "arena/cli.hpp"
#include "arena/engine.hpp"

using namespace arena;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "arena_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int count_lines_with(const std::string& text, const std::string& needle)
{
    std::istringstream in(text);
    int c = 0;
    for (std::string line; std::getline(in, line);)
        if (line.find(needle) != std::string::npos) ++c;
    return c;
}

}  // namespace

TEST_CASE("play writes a transcript that verifies")
{
    auto file = scratch("play.json").string();
    auto r = cli({"play", "--n", "24", "--b", "22", "--rules", "monotone", "--obreaker", "alpha-monotone", "--omaker",
                  "max-threats", "--seed", "0", "--out", file});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("winner=OBreaker") != std::string::npos);
    std::ifstream in(file);
    auto j = json::parse(in);
    CHECK(j["winner"] == "OBreaker");

    auto v = cli({"verify", "--in", file});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("clean") != std::string::npos);
    auto deep = cli({"verify", "--in", file, "--deep"});
    CHECK(deep.code == kExitOk);
}

TEST_CASE("trivial at n=3 under strict rules")
{
    auto r = cli({"play", "--n", "3", "--b", "1", "--rules", "strict", "--obreaker", "trivial", "--omaker", "random"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["winner"] == "OBreaker");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(cli({"play", "--n", "24", "--b", "22", "--rules", "strict", "--obreaker", "alpha-monotone"}).code == kExitUsage);
    CHECK(cli({"play", "--n", "24"}).code == kExitUsage);
    CHECK(cli({"play", "--n", "24", "--b", "22", "--rules", "sideways"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"verify", "--in", scratch("missing.json").string()}).code == kExitUsage);
    CHECK(cli({"sweep", "--n", "12", "--b", "3", "--b-frac", "1/2"}).code == kExitUsage);
    CHECK(cli({"sweep", "--n", "12", "--b-frac", "1.5/2"}).code == kExitUsage);
}

TEST_CASE("verify lists violations in an edited transcript")
{
    auto file = scratch("edited.json").string();
    REQUIRE(cli({"play", "--n", "12", "--b", "12", "--out", file}).code == kExitOk);
    json j;
    {
        std::ifstream in(file);
        j = json::parse(in);
    }
    j["rounds"][1]["maker"] = j["rounds"][0]["maker"];
    {
        std::ofstream out(file);
        out << j.dump();
    }
    auto v = cli({"verify", "--in", file});
    CHECK(v.code == kExitViolations);
    CHECK(v.out.find("violation Availability") != std::string::npos);

    std::ofstream(file) << "{not json";
    CHECK(cli({"verify", "--in", file}).code == kExitUsage);
}

TEST_CASE("monotone sweep")
{
    auto r = cli({"sweep", "--n", "12..24:6", "--b-frac", "5/6+2", "--rules", "monotone", "--seeds", "0,1", "--referee"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("n,b,rules,obreaker,omaker,seed,winner,max_reply,rounds\n", 0) == 0);
    CHECK(count_lines_with(r.out, ",OBreaker,") == 3 * 5 * 2);
    CHECK(r.out.find("# games=30 obreaker_wins=30 omaker_wins=0") != std::string::npos);
}

TEST_CASE("naive sweep loses every game")
{
    auto r = cli({"sweep", "--n", "10..40:10", "--b-frac", "1/2-2", "--rules", "monotone", "--obreaker", "naive",
                  "--omaker", "close-or-longpath"});
    CHECK(r.code == kExitOk);
    CHECK(count_lines_with(r.out, ",OMaker,") == 4);
    CHECK(r.out.find("obreaker_wins=0") != std::string::npos);
}

TEST_CASE("strict sweep rows")
{
    auto r = cli({"sweep", "--n", "200", "--b-frac", "19/20", "--rules", "strict", "--omaker", "random"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("200,190,strict,riskless-strict,random,0,OBreaker,190,") != std::string::npos);
}

TEST_CASE("solve")
{
    auto r = cli({"solve", "--n", "4", "--b", "1..3", "--rules", "strict"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("4,1,strict,OMaker,") != std::string::npos);
    CHECK(r.out.find("4,2,strict,OBreaker,") != std::string::npos);
    auto capped = cli({"solve", "--n", "5", "--b", "2", "--cap", "10"});
    CHECK(capped.out.find("unsolved") != std::string::npos);
}

TEST_CASE("the installed binary reports exit codes")
{
    const std::string bin = ARENA_BINARY;
    auto file = scratch("bin.json").string();
    CHECK(std::system((bin + " play --n 12 --b 12 --out " + file + " 2>/dev/null").c_str()) == 0);
    CHECK(WEXITSTATUS(std::system((bin + " verify --in " + file + " >/dev/null").c_str())) == 0);
    CHECK(WEXITSTATUS(std::system((bin + " play --n 12 2>/dev/null").c_str())) == 2);
}
