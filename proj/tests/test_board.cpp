#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "arena/board.hpp"
#include "arena/serialize.hpp"

using namespace arena;

namespace {

OrientationBoard with_arcs(int n, std::initializer_list<Arc> arcs)
{
    auto b = new_board(n);
    for (Arc a : arcs) b.direct(a);
    return b;
}

// Random orientation consistent with a random linear order, so acyclic.
OrientationBoard random_acyclic(int n, double density, std::mt19937_64& rng)
{
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    auto b = new_board(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.direct({order[i], order[j]});
    return b;
}

// Every board on n vertices, pair codes enumerated in base 3.
std::vector<OrientationBoard> all_boards(int n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    long long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    std::vector<OrientationBoard> out;
    for (long long code = 0; code < total; ++code) {
        auto b = new_board(n);
        long long c = code;
        for (auto [u, v] : pairs) {
            int s = static_cast<int>(c % 3);
            c /= 3;
            if (s == 1) b.direct({u, v});
            if (s == 2) b.direct({v, u});
        }
        out.push_back(std::move(b));
    }
    return out;
}

bool closes_triangle(const OrientationBoard& b, Arc a)
{
    for (Vertex z = 0; z < b.n(); ++z)
        if (z != a.tail && z != a.head && b.has_arc(a.head, z) && b.has_arc(z, a.tail)) return true;
    return false;
}

}  // namespace

TEST_CASE("new_board pair counts")
{
    CHECK(new_board(1).pair_count() == 0);
    CHECK(new_board(3).undirected_count() == 3);
    CHECK(new_board(6).undirected_count() == 15);
    CHECK(new_board(6).arc_count() == 0);
    CHECK_THROWS_AS(new_board(0), ArenaError);
}

TEST_CASE("direct signals")
{
    auto b = new_board(4);
    CHECK(b.direct({1, 2}) == DirectOutcome::Directed);
    CHECK(b.arc_count() == 1);
    CHECK(b.direct({1, 2}) == DirectOutcome::AlreadyPresent);
    CHECK(b.direct({2, 1}) == DirectOutcome::ReverseConflict);
    CHECK(b.arc_count() == 1);
    CHECK(b.has_arc({1, 2}));
    CHECK_FALSE(b.has_arc({2, 1}));
    try {
        b.direct({3, 3});
        FAIL("loop accepted");
    } catch (const ArenaError& e) {
        CHECK(e.kind() == ErrorKind::LoopRejected);
    }
    CHECK_THROWS_AS(b.direct({0, 4}), ArenaError);
}

TEST_CASE("available arcs")
{
    CHECK(new_board(3).available().size() == 6);
    auto b = with_arcs(3, {{1, 2}});
    auto av = b.available();
    CHECK(av == std::vector<Arc>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
    auto full = with_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(full.available().empty());
    CHECK(full.is_full());
}

TEST_CASE("reverse_board")
{
    auto b = with_arcs(3, {{1, 2}});
    auto r = reverse_board(b);
    CHECK(r.has_arc({2, 1}));
    CHECK(r.arc_count() == 1);
    CHECK(reverse_board(new_board(5)) == new_board(5));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto d = random_acyclic(8, 0.5, rng);
        CHECK(reverse_board(reverse_board(d)) == d);
        auto av = d.available(), rav = reverse_board(d).available();
        CHECK(av == rav);
    }
}

TEST_CASE("has_cycle")
{
    CHECK(has_cycle(with_arcs(4, {{1, 2}, {2, 3}, {3, 1}})));
    CHECK_FALSE(has_cycle(with_arcs(4, {{1, 2}, {1, 3}, {2, 3}})));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) CHECK_FALSE(has_cycle(random_acyclic(12, 0.6, rng)));
}

TEST_CASE("closing_arcs")
{
    CHECK(closing_arcs(with_arcs(4, {{1, 2}, {2, 3}})) == std::vector<Arc>{{3, 1}});
    CHECK(closing_arcs(new_board(5)).empty());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto d = random_acyclic(n, 0.5, rng);
        std::vector<Arc> brute;
        for (Arc a : d.available()) {
            auto next = d;
            next.direct(a);
            if (has_cycle(next)) brute.push_back(a);
        }
        CHECK(closing_arcs(d) == brute);
    }
}

TEST_CASE("closing arcs always include a triangle closer")
{
    for (int n = 3; n <= 5; ++n)
        for (const auto& d : all_boards(n)) {
            if (has_cycle(d)) continue;
            auto c = closing_arcs(d);
            if (c.empty()) continue;
            CHECK(std::any_of(c.begin(), c.end(), [&](Arc a) { return closes_triangle(d, a); }));
        }
}

TEST_CASE("closing arcs are dual")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto d = random_acyclic(9, 0.4, rng);
        auto c = closing_arcs(d);
        std::vector<Arc> rev;
        for (Arc a : c) rev.push_back(a.reversed());
        std::sort(rev.begin(), rev.end());
        CHECK(closing_arcs(reverse_board(d)) == rev);
    }
}

TEST_CASE("is_transitive_tournament")
{
    auto t = with_arcs(4, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<Vertex> s{1, 2, 3};
    CHECK(is_transitive_tournament(t, s));
    CHECK_FALSE(is_transitive_tournament(t));
    auto partial = with_arcs(4, {{1, 2}, {1, 3}});
    CHECK_FALSE(is_transitive_tournament(partial, s));
    auto cyc = with_arcs(4, {{1, 2}, {2, 3}, {3, 1}});
    CHECK_FALSE(is_transitive_tournament(cyc, s));
}

TEST_CASE("induced")
{
    auto t = with_arcs(4, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(induced(t, all).board == t);
    CHECK(induced(t, std::vector<Vertex>{}).board.n() == 0);
    auto pair = induced(t, std::vector<Vertex>{1, 3});
    CHECK(pair.board.n() == 2);
    CHECK(pair.board.has_arc({0, 1}));
    CHECK(pair.original == std::vector<Vertex>{1, 3});

    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto d = random_acyclic(8, 0.5, rng);
        std::vector<Vertex> sub{0, 2, 3, 6};
        CHECK(induced(reverse_board(d), sub).board == reverse_board(induced(d, sub).board));
    }
}

TEST_CASE("board json round trip and hashing")
{
    auto t = with_arcs(5, {{4, 0}, {1, 2}});
    auto j = board_to_json(t);
    CHECK(j["n"] == 5);
    CHECK(j["arcs"].dump() == "[[1,2],[4,0]]");
    CHECK(board_from_json(j) == t);
    CHECK(board_hash(t) == board_hash(board_from_json(j)));
    CHECK(board_hash(t) != board_hash(new_board(5)));
    CHECK(hash_hex(board_hash(t)).size() == 16);
}
