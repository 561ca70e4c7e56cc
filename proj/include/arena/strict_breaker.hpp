#pragma once

#include <vector>

#include "arena/board.hpp"
#include "arena/riskless_protected.hpp"

namespace arena {

enum class StrictStage { I, II };

std::string_view to_string(StrictStage s);

struct StrictState {
    StrictStage stage = StrictStage::I;
    RisklessState riskless;
    ProtectedState prot;
    int round = 0;

    int rank() const { return static_cast<int>(riskless.a_star.size()); }

    friend bool operator==(const StrictState&, const StrictState&) = default;
};

StrictState dual_state(const StrictState& s);

struct StageReply {
    std::vector<Arc> arcs;
    RisklessState riskless;
};

// The building blocks below mutate `board` in place and return the arcs they
// directed. `board` already holds the maker arc e, which lies inside V \ B.

// Restores a riskless certificate of rank r + 1 after e.
StageReply base_one(OrientationBoard& board, const RisklessState& state, Arc e);

// Tops the board up to rank * (b + 1) arcs without leaving riskless of `rank`.
StageReply add_edges_one(OrientationBoard& board, const RisklessState& state, int b);

struct ProtectedReply {
    std::vector<Arc> arcs;
    ProtectedState prot;
};

ProtectedReply base_two(OrientationBoard& board, const ProtectedState& state, Arc e);

// Directs one arc that keeps the board protected, repartitioning as needed.
// Throws ArenaError(NoMove) when the board is full.
ProtectedReply add_edge_two(OrientationBoard& board, const ProtectedState& state);

struct StrictReply {
    std::vector<Arc> arcs;
    StrictState state;
};

// `board` already contains `maker_arc`. Replies with exactly b arcs unless the
// board fills up first. With `verify` set, the certificate is re-checked after
// the move and a failure throws ArenaError(InvariantBreach).
StrictReply respond_strict(const StrictState& state, const OrientationBoard& board, Arc maker_arc, int b,
                           bool verify = true);

// Certificate check for the current stage, including the arc-count ledger
// during the first stage when b > 0.
Violations check_strict_invariants(const StrictState& state, const OrientationBoard& board, int b = 0);

}  // namespace arena
