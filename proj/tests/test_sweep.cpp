#include <cstdlib>

#include "doctest.h"

#include "arena/sweep.hpp"

using namespace arena;

TEST_CASE("bias formulas are exact")
{
    auto f = parse_bias_formula("5/6+2");
    CHECK(f.eval(12) == 12);
    CHECK(f.eval(13) == 13);  // ceil(65/6) = 11
    CHECK(f.eval(120) == 102);
    auto g = parse_bias_formula("19/20");
    CHECK(g.eval(200) == 190);
    CHECK(g.eval(201) == 191);
    CHECK(g.eval(60) == 57);
    auto h = parse_bias_formula("1/2-2");
    CHECK(h.eval(10) == 3);
    CHECK(h.eval(30) == 13);
    CHECK_THROWS_AS(parse_bias_formula("5"), ArenaError);
    CHECK_THROWS_AS(parse_bias_formula("5/0"), ArenaError);
    CHECK_THROWS_AS(parse_bias_formula("5/6+x"), ArenaError);
    CHECK_THROWS_AS(parse_bias_formula("0.8/1"), ArenaError);
}

TEST_CASE("integer lists")
{
    CHECK(parse_int_list("10..40:10") == std::vector<int>{10, 20, 30, 40});
    CHECK(parse_int_list("3..5") == std::vector<int>{3, 4, 5});
    CHECK(parse_int_list("7,1,4") == std::vector<int>{7, 1, 4});
    CHECK(parse_int_list("9") == std::vector<int>{9});
    CHECK_THROWS_AS(parse_int_list("1..5:0"), ArenaError);
    CHECK_THROWS_AS(parse_int_list("a,b"), ArenaError);
}

TEST_CASE("parallel sweep equals the serial one")
{
    std::vector<GameConfig> configs;
    for (int n : {12, 18, 24})
        for (const auto& m : maker_names())
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                GameConfig c;
                c.n = n;
                c.b = parse_bias_formula("5/6+2").eval(n);
                c.omaker = m;
                c.seed = seed;
                configs.push_back(c);
            }
    auto serial = run_sweep_serial(configs, true);
    for (int threads : {1, 3, 8}) {
        auto parallel = run_sweep(configs, threads, true);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(csv_row(parallel[i]) == csv_row(serial[i]));
    }
    for (const auto& r : serial) {
        CHECK(r.winner == Player::OBreaker);
        CHECK(r.violations == 0);
    }
}

TEST_CASE("thread cap from the environment")
{
    setenv("ARENA_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    setenv("ARENA_THREADS", "junk", 1);
    CHECK(default_threads() >= 1);
    unsetenv("ARENA_THREADS");
}

TEST_CASE("csv layout")
{
    CHECK(csv_header() == "n,b,rules,obreaker,omaker,seed,winner,max_reply,rounds");
    GameConfig c;
    c.n = 12;
    c.b = 12;
    auto row = run_sweep_serial({c}).front();
    CHECK(csv_row(row).rfind("12,12,monotone,alpha-monotone,close-or-random,0,OBreaker,", 0) == 0);
}
