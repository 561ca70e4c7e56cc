// One PASS/FAIL line per acceptance criterion. Exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "alpha_props.hpp"
#include "arena/cli.hpp"
#include "arena/engine.hpp"
#include "arena/solver.hpp"
#include "strict_sim.hpp"

using namespace arena;

namespace {

const std::vector<std::string> kAdversaries = {"close-or-random", "close-or-longpath", "random", "max-threats"};

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;

    void fail(const std::string& why)
    {
        pass = false;
        if (notes.size() < 5) notes.push_back(why);
    }
};

int ceil_div(long long a, long long b)
{
    return static_cast<int>((a + b - 1) / b);
}

Outcome monotone_suite()
{
    Outcome o;
    int games = 0, max_reply = 0;
    for (int n : {12, 18, 24, 36, 48, 60, 90, 120}) {
        const int b = ceil_div(5LL * n, 6) + 2;
        for (const auto& m : kAdversaries)
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                GameConfig c;
                c.n = n;
                c.b = b;
                c.rules = Rules::Monotone;
                c.obreaker = "alpha-monotone";
                c.omaker = m;
                c.seed = seed;
                c.check_certificates = true;
                bool cycle_seen = false;
                auto t = play(c, [&](const Round&, const OrientationBoard& board) {
                    if (has_cycle(board)) cycle_seen = true;
                });
                ++games;
                const std::string tag = "n=" + std::to_string(n) + " " + m + " seed=" + std::to_string(seed);
                if (t.terminal != Terminal::TransitiveTournament || t.winner != Player::OBreaker)
                    o.fail(tag + ": " + (t.terminal ? std::string(to_string(*t.terminal)) : "no terminal") + " " +
                           t.diagnostic);
                if (cycle_seen) o.fail(tag + ": cycle on the board");
                if (!is_transitive_tournament(t.final_board)) o.fail(tag + ": final board not transitive");
                for (std::size_t i = 0; i < t.rounds.size(); ++i) {
                    const auto& r = t.rounds[i];
                    // OMaker's arc may fill the board, leaving nothing to answer
                    const bool filled = i + 1 == t.rounds.size() && r.breaker.empty();
                    if ((r.breaker.empty() && !filled) || static_cast<int>(r.breaker.size()) > b)
                        o.fail(tag + ": reply size");
                    max_reply = std::max(max_reply, static_cast<int>(r.breaker.size()));
                }
                for (const auto& v : referee_check(t)) o.fail(tag + ": " + v.property + ": " + v.detail);
            }
    }
    o.detail = std::to_string(games) + " games, max reply " + std::to_string(max_reply);
    return o;
}

Outcome strict_suite()
{
    Outcome o;
    const int n0 = minimal_transition_n();
    if (n0 != 200) o.fail("N0 = " + std::to_string(n0));
    int games = 0, protected_checks = 0;
    for (int n : {n0, n0 + 25, n0 + 50, 2 * n0}) {
        const int b = ceil_div(19LL * n, 20);
        if (b > n - 3) o.fail("b exceeds n-3 at n=" + std::to_string(n));
        for (const auto& m : kAdversaries)
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                auto run = testing::run_strict(n, b, m, seed);
                ++games;
                protected_checks += run.protected_checks;
                const std::string tag = "n=" + std::to_string(n) + " " + m + " seed=" + std::to_string(seed);
                for (const auto& p : run.problems) o.fail(tag + ": " + p);
                if (!run.exact_bias) o.fail(tag + ": reply size differs from b");
                if (!run.ledger_ok) o.fail(tag + ": stage I ledger");
                if (!run.sizes_ok) o.fail(tag + ": size bounds");
                if (run.transition_round != n / 25) o.fail(tag + ": transition after round " +
                                                           std::to_string(run.transition_round));
                if (!run.transitive) o.fail(tag + ": final board not transitive");
            }
    }
    o.detail = "N0=" + std::to_string(n0) + ", " + std::to_string(games) + " games, " +
               std::to_string(protected_checks) + " protected checks";
    return o;
}

Outcome alpha_suite()
{
    Outcome o;
    auto r = testing::run_alpha_suite(6, 5, 1000);
    for (const auto& f : r.failures) o.fail(f);
    o.detail = std::to_string(r.structures) + " structures, " + std::to_string(r.checks) + " checks";
    return o;
}

Outcome oracle_suite()
{
    Outcome o;
    int solved = 0;
    long long playouts = 0;
    for (Rules rules : {Rules::Monotone, Rules::Strict})
        for (int n = 3; n <= 4; ++n)
            for (int b = n - 2; b <= 5; ++b) {
                if (b < 1) continue;
                const std::string tag =
                    std::string(to_string(rules)) + " n=" + std::to_string(n) + " b=" + std::to_string(b);
                auto exact = solve_exact(n, b, rules);
                ++solved;
                if (exact.winner != Player::OBreaker) o.fail(tag + ": solver says OMaker");
                GameConfig c;
                c.n = n;
                c.b = b;
                c.rules = rules;
                c.obreaker = "trivial";
                auto p = exhaustive_playouts(c);
                playouts += p.games;
                if (p.breaker_wins != p.games)
                    o.fail(tag + ": trivial lost " + std::to_string(p.games - p.breaker_wins) + " playouts");
            }
    o.detail = std::to_string(solved) + " positions solved, " + std::to_string(playouts) + " trivial playouts";
    return o;
}

Outcome naive_suite()
{
    Outcome o;
    int games = 0, maker_wins = 0;
    for (int n = 10; n <= 40; n += 10) {
        const int b = n / 2 - 2;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GameConfig c;
            c.n = n;
            c.b = b;
            c.rules = Rules::Monotone;
            c.obreaker = "naive";
            c.omaker = "close-or-longpath";
            c.seed = seed;
            auto t = play(c);
            ++games;
            if (t.winner == Player::OMaker && t.terminal == Terminal::CycleClosed)
                ++maker_wins;
            else
                o.fail("n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": OMaker did not close a cycle");
        }
    }
    o.detail = std::to_string(maker_wins) + "/" + std::to_string(games) + " OMaker wins";
    return o;
}

Outcome roundtrip_suite()
{
    Outcome o;
    auto dir = std::filesystem::temp_directory_path() / "arena_acceptance";
    std::filesystem::create_directories(dir);
    std::mt19937_64 rng(20240611);
    const std::vector<std::string> makers = {"close-or-random", "close-or-longpath", "random", "max-threats", "longpath"};
    int games = 0;
    for (int i = 0; i < 100; ++i) {
        const int kind = static_cast<int>(rng() % 5);
        int n = 0, b = 0;
        std::string rules, breaker;
        switch (kind) {
        case 0:
            n = 3 + static_cast<int>(rng() % 60);
            b = ceil_div(5LL * n, 6) + 2 + static_cast<int>(rng() % 3);
            rules = "monotone", breaker = "alpha-monotone";
            break;
        case 1:
            n = 60 + static_cast<int>(rng() % 160);
            b = ceil_div(19LL * n, 20) + static_cast<int>(rng() % 2);
            b = std::min(b, n - 3);
            rules = "strict", breaker = "riskless-strict";
            break;
        case 2:
            n = 2 + static_cast<int>(rng() % 12);
            b = std::max(1, n - 2) + static_cast<int>(rng() % 2);
            rules = rng() % 2 ? "strict" : "monotone", breaker = "trivial";
            break;
        default:
            n = 2 + static_cast<int>(rng() % 30);
            b = 1 + static_cast<int>(rng() % n);
            rules = rng() % 2 ? "strict" : "monotone", breaker = "naive";
            break;
        }
        const std::string maker = makers[rng() % makers.size()];
        const auto file = (dir / ("game" + std::to_string(i) + ".json")).string();
        std::ostringstream out, err;
        const int play_code = run_cli({"play", "--n", std::to_string(n), "--b", std::to_string(b), "--rules", rules,
                                       "--obreaker", breaker, "--omaker", maker, "--seed", std::to_string(rng() % 1000),
                                       "--out", file},
                                      out, err);
        const std::string tag = "game " + std::to_string(i) + " (n=" + std::to_string(n) + " b=" + std::to_string(b) +
                                " " + rules + " " + breaker + " vs " + maker + ")";
        if (play_code != kExitOk) o.fail(tag + ": play exit " + std::to_string(play_code) + " " + err.str());
        std::ostringstream vout, verr;
        const int verify_code = run_cli({"verify", "--in", file, "--deep"}, vout, verr);
        if (verify_code != kExitOk) o.fail(tag + ": verify exit " + std::to_string(verify_code) + " " + vout.str());
        ++games;
    }
    o.detail = std::to_string(games) + " transcripts verified";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "monotone win suite", monotone_suite},
        {2, "strict win suite", strict_suite},
        {3, "alpha-structure property suite", alpha_suite},
        {4, "exact oracle suite", oracle_suite},
        {5, "naive breaker failure mode", naive_suite},
        {6, "transcript round trip", roundtrip_suite},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %-32s %s  %s  [%.1fs]\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                    secs);
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
