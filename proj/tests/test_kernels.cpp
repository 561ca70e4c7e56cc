#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "arena/kernels.hpp"

using namespace arena;

namespace {

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

}  // namespace

TEST_CASE("bit matrix")
{
    BitMatrix m(130);
    CHECK(m.words() == 3);
    m.set(5, 129);
    m.set(5, 0);
    CHECK(m.test(5, 129));
    CHECK_FALSE(m.test(5, 128));
    CHECK(m.row_count(5) == 2);
}

TEST_CASE("reachability agrees with breadth-first distances")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        auto b = random_acyclic(3 + trial * 2, 0.2, rng);
        auto reach = reachability(b);
        for (Vertex u = 0; u < b.n(); ++u) {
            auto d = distances_from(b, u);
            for (Vertex v = 0; v < b.n(); ++v) CHECK(reach.test(u, v) == (v != u && d[v] > 0));
        }
    }
}

TEST_CASE("threat kernel matches the serial reference")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        const double density = 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0;
        auto b = random_acyclic(n, density, rng);
        auto ref = threat_scores_reference(b);
        for (int threads : {1, 2, 4}) {
            auto fast = threat_scores(b, threads);
            CHECK(fast.n == ref.n);
            CHECK(fast.score == ref.score);
        }
    }
}

TEST_CASE("threat scores on a path")
{
    auto b = new_board(4);
    b.direct({0, 1});
    b.direct({1, 2});
    auto s = threat_scores(b);
    CHECK(s.at({0, 1}) == ThreatScores::kUnavailable);
    CHECK(s.at({2, 0}) == ThreatScores::kClosing);
    CHECK(s.at({3, 3}) == ThreatScores::kUnavailable);
    // 2->3 extends the path: (2,0), (3,0) and (3,1) close
    CHECK(s.at({2, 3}) == 3);
    CHECK(s.at({2, 3}) == threat_scores_reference(b).at({2, 3}));
}
