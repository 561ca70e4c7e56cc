#pragma once

#include <cstdint>

#include "arena/engine.hpp"

namespace arena {

struct SolveResult {
    int n = 0;
    int b = 0;
    Rules rules = Rules::Monotone;
    Player winner = Player::OBreaker;
    std::int64_t positions = 0;  // distinct positions evaluated
};

// Full minimax over orientation states, OMaker to move on the empty board.
// Throws ArenaError(Unsolved) once more than `position_cap` positions are needed.
SolveResult solve_exact(int n, int b, Rules rules, std::int64_t position_cap = 2'000'000);

struct PlayoutSummary {
    std::int64_t games = 0;
    std::int64_t breaker_wins = 0;
    int max_reply = 0;
};

// Plays `config.obreaker` against every OMaker move sequence (config.omaker is
// ignored). Throws ArenaError(Unsolved) past `game_cap` games.
PlayoutSummary exhaustive_playouts(const GameConfig& config, std::int64_t game_cap = 5'000'000);

}  // namespace arena
