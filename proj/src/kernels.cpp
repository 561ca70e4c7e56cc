#include "arena/kernels.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

namespace arena {

BitMatrix::BitMatrix(int n) : n_(n), words_((n + 63) / 64)
{
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

int BitMatrix::row_count(int r) const
{
    int c = 0;
    const auto* p = row(r);
    for (int w = 0; w < words_; ++w) c += std::popcount(p[w]);
    return c;
}

BitMatrix reachability(const OrientationBoard& board)
{
    const int n = board.n();
    BitMatrix reach(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (board.has_arc(u, v)) reach.set(u, v);
    const int words = reach.words();
    for (int k = 0; k < n; ++k) {
        const std::uint64_t* rk = reach.row(k);
        for (int i = 0; i < n; ++i) {
            if (!reach.test(i, k)) continue;
            std::uint64_t* ri = reach.row(i);
            for (int w = 0; w < words; ++w) ri[w] |= rk[w];
        }
    }
    return reach;
}

ThreatScores threat_scores_reference(const OrientationBoard& board)
{
    const int n = board.n();
    ThreatScores out{n, std::vector<int>(static_cast<std::size_t>(n) * n, ThreatScores::kUnavailable)};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (!board.is_undirected(u, v)) continue;
            OrientationBoard next = board;
            next.direct({u, v});
            auto& slot = out.score[static_cast<std::size_t>(u) * n + v];
            slot = has_cycle(next) ? ThreatScores::kClosing : static_cast<int>(closing_arcs(next).size());
        }
    }
    return out;
}

ThreatScores threat_scores(const OrientationBoard& board, int threads)
{
    if (has_cycle(board)) throw ArenaError(ErrorKind::InvalidArgument, "threat scoring needs an acyclic board");
    const int n = board.n();
    ThreatScores out{n, std::vector<int>(static_cast<std::size_t>(n) * n, ThreatScores::kUnavailable)};
    if (n < 2) return out;

    const BitMatrix desc = reachability(board);
    BitMatrix anc(n);
    BitMatrix open(n);  // available and incomparable pairs
    const int words = desc.words();
    std::int64_t base2 = 0;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            if (desc.test(x, y)) anc.set(y, x);
        }
    }
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            if (!board.is_undirected(x, y)) continue;
            if (desc.test(x, y) || anc.test(x, y))
                ++base2;
            else
                open.set(x, y);
        }
    }
    const int base = static_cast<int>(base2 / 2);

    int planes = 1;
    while ((1 << planes) <= n) ++planes;

    const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(team)
    {
        std::vector<std::uint64_t> anc_star(words);
        std::vector<std::uint64_t> desc_star(words);
        std::vector<std::uint64_t> plane(static_cast<std::size_t>(planes) * words);

#pragma omp for schedule(dynamic, 4)
        for (Vertex u = 0; u < n; ++u) {
            bool any = false;
            for (Vertex v = 0; v < n && !any; ++v) any = board.is_undirected(u, v);
            if (!any) continue;

            const std::uint64_t* au = anc.row(u);
            for (int w = 0; w < words; ++w) anc_star[w] = au[w];
            anc_star[u >> 6] |= std::uint64_t{1} << (u & 63);

            // plane b holds bit b of |Anc*(u) ∩ open(x)| for every x
            std::fill(plane.begin(), plane.end(), 0);
            for (Vertex x = 0; x < n; ++x) {
                const std::uint64_t* ox = open.row(x);
                int c = 0;
                for (int w = 0; w < words; ++w) c += std::popcount(anc_star[w] & ox[w]);
                for (int b = 0; c != 0; ++b, c >>= 1)
                    if (c & 1) plane[static_cast<std::size_t>(b) * words + (x >> 6)] |= std::uint64_t{1} << (x & 63);
            }

            for (Vertex v = 0; v < n; ++v) {
                if (!board.is_undirected(u, v)) continue;
                auto& slot = out.score[static_cast<std::size_t>(u) * n + v];
                if (desc.test(v, u)) {
                    slot = ThreatScores::kClosing;
                    continue;
                }
                const std::uint64_t* dv = desc.row(v);
                for (int w = 0; w < words; ++w) desc_star[w] = dv[w];
                desc_star[v >> 6] |= std::uint64_t{1} << (v & 63);
                std::int64_t gain = 0;
                for (int b = 0; b < planes; ++b) {
                    const std::uint64_t* pb = plane.data() + static_cast<std::size_t>(b) * words;
                    int c = 0;
                    for (int w = 0; w < words; ++w) c += std::popcount(pb[w] & desc_star[w]);
                    gain += static_cast<std::int64_t>(c) << b;
                }
                slot = base + static_cast<int>(gain) - 1;
            }
        }
    }
    return out;
}

}  // namespace arena
