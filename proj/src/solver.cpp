#include "arena/solver.hpp"

#include <unordered_map>

namespace arena {

namespace {

class Solver {
public:
    Solver(int n, int b, Rules rules, std::int64_t cap) : n_(n), b_(b), rules_(rules), cap_(cap)
    {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }

    bool maker_wins(const OrientationBoard& board, bool maker_turn)
    {
        const std::uint64_t key = encode(board) * 2 + (maker_turn ? 1 : 0);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (static_cast<std::int64_t>(memo_.size()) >= cap_)
            throw ArenaError(ErrorKind::Unsolved, "position cap reached for n=" + std::to_string(n_) +
                                                      ", b=" + std::to_string(b_));
        const bool result = maker_turn ? maker_node(board) : breaker_node(board);
        memo_.emplace(key, result);
        return result;
    }

    std::int64_t positions() const { return static_cast<std::int64_t>(memo_.size()); }

private:
    std::uint64_t encode(const OrientationBoard& board) const
    {
        std::uint64_t code = 0;
        for (auto [u, v] : pairs_) code = code * 3 + board.pair_code(u, v);
        return code;
    }

    bool maker_node(const OrientationBoard& board)
    {
        if (board.is_full()) return false;
        for (Arc a : board.available()) {
            OrientationBoard next = board;
            next.direct(a);
            if (has_cycle(next)) return true;
            if (next.is_full()) continue;
            if (maker_wins(next, false)) return true;
        }
        return false;
    }

    // OBreaker picks a set of open pairs and an orientation for each.
    bool breaker_node(const OrientationBoard& board)
    {
        std::vector<std::pair<Vertex, Vertex>> open;
        for (auto p : pairs_)
            if (board.is_undirected(p.first, p.second)) open.push_back(p);
        const int u = static_cast<int>(open.size());
        const int top = std::min(b_, u);
        const int low = rules_ == Rules::Strict ? top : 1;
        for (int k = low; k <= top; ++k) {
            std::vector<int> pick(k);
            for (int i = 0; i < k; ++i) pick[i] = i;
            for (;;) {
                for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                    OrientationBoard next = board;
                    for (int i = 0; i < k; ++i) {
                        auto [x, y] = open[pick[i]];
                        next.direct((mask >> i) & 1 ? Arc{y, x} : Arc{x, y});
                    }
                    if (has_cycle(next)) continue;
                    if (next.is_full() || !maker_wins(next, true)) return false;
                }
                int i = k - 1;
                while (i >= 0 && pick[i] == u - k + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }

    int n_, b_;
    Rules rules_;
    std::int64_t cap_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

struct Playouts {
    const GameConfig& config;
    std::int64_t cap;
    PlayoutSummary summary;

    void finish(bool breaker_won)
    {
        ++summary.games;
        if (breaker_won) ++summary.breaker_wins;
        if (summary.games > cap) throw ArenaError(ErrorKind::Unsolved, "playout cap reached");
    }

    void run(const OrientationBoard& board, const BreakerStrategy& breaker)
    {
        for (Arc a : board.available()) {
            OrientationBoard next = board;
            next.direct(a);
            if (has_cycle(next)) {
                finish(false);
                continue;
            }
            if (next.is_full()) {
                finish(true);
                continue;
            }
            auto mine = breaker.clone();
            std::vector<Arc> reply;
            try {
                reply = mine->respond(next, a);
            } catch (const ArenaError&) {
                finish(false);
                continue;
            }
            if (judge_reply(next, reply, config.b, config.rules)) {
                finish(false);
                continue;
            }
            summary.max_reply = std::max(summary.max_reply, static_cast<int>(reply.size()));
            for (Arc f : reply) next.direct(f);
            if (has_cycle(next))
                finish(false);
            else if (next.is_full())
                finish(true);
            else
                run(next, *mine);
        }
    }
};

}  // namespace

SolveResult solve_exact(int n, int b, Rules rules, std::int64_t position_cap)
{
    if (n < 1 || b < 1) throw ArenaError(ErrorKind::InvalidArgument, "solve_exact needs n >= 1 and b >= 1");
    Solver solver(n, b, rules, position_cap);
    const bool maker = solver.maker_wins(new_board(n), true);
    return {n, b, rules, maker ? Player::OMaker : Player::OBreaker, solver.positions()};
}

PlayoutSummary exhaustive_playouts(const GameConfig& config, std::int64_t game_cap)
{
    validate_config(config);
    auto breaker = make_breaker(config.obreaker, {config.n, config.b, config.rules, false});
    Playouts p{config, game_cap, {}};
    OrientationBoard board = new_board(config.n);
    if (board.is_full())
        p.finish(true);
    else
        p.run(board, *breaker);
    return p.summary;
}

}  // namespace arena
