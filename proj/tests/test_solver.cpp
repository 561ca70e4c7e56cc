#include "doctest.h"

#include "arena/solver.hpp"

using namespace arena;

TEST_CASE("exact values at n = 3 and 4")
{
    for (Rules rules : {Rules::Monotone, Rules::Strict}) {
        CAPTURE(to_string(rules));
        for (int b = 1; b <= 5; ++b) CHECK(solve_exact(3, b, rules).winner == Player::OBreaker);
        CHECK(solve_exact(4, 1, rules).winner == Player::OMaker);
        for (int b = 2; b <= 5; ++b) CHECK(solve_exact(4, b, rules).winner == Player::OBreaker);
    }
}

TEST_CASE("n = 5")
{
    CHECK(solve_exact(5, 2, Rules::Monotone).winner == Player::OMaker);
    CHECK(solve_exact(5, 3, Rules::Monotone).winner == Player::OBreaker);
    CHECK(solve_exact(5, 3, Rules::Strict).winner == Player::OBreaker);
}

TEST_CASE("tiny boards")
{
    CHECK(solve_exact(1, 1, Rules::Monotone).winner == Player::OBreaker);
    CHECK(solve_exact(2, 1, Rules::Strict).winner == Player::OBreaker);
    CHECK_THROWS_AS(solve_exact(0, 1, Rules::Monotone), ArenaError);
}

TEST_CASE("position cap")
{
    try {
        solve_exact(5, 2, Rules::Monotone, 100);
        FAIL("cap ignored");
    } catch (const ArenaError& e) {
        CHECK(e.kind() == ErrorKind::Unsolved);
    }
}

TEST_CASE("solver agrees with trivial playouts")
{
    for (int n = 3; n <= 4; ++n)
        for (int b = std::max(1, n - 2); b <= 5; ++b)
            for (Rules rules : {Rules::Monotone, Rules::Strict}) {
                auto exact = solve_exact(n, b, rules);
                REQUIRE(exact.winner == Player::OBreaker);
                GameConfig c;
                c.n = n;
                c.b = b;
                c.rules = rules;
                c.obreaker = "trivial";
                auto p = exhaustive_playouts(c);
                CHECK(p.breaker_wins == p.games);
            }
}

TEST_CASE("playouts of a losing strategy")
{
    GameConfig c;
    c.n = 4;
    c.b = 1;
    c.obreaker = "naive";
    auto p = exhaustive_playouts(c);
    CHECK(p.games > 0);
    CHECK(p.breaker_wins < p.games);
}
