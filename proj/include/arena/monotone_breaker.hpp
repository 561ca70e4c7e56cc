#pragma once

#include <optional>
#include <vector>

#include "arena/alpha.hpp"
#include "arena/board.hpp"

namespace arena {

enum class MonotoneStage { I, II, III };

std::string_view to_string(MonotoneStage s);

// UDB (A, B) with an alpha-structure on V \ B (rank k) and one on V \ A (rank l).
// A and B keep insertion order; the order only affects which arcs are emitted first.
struct MonotoneState {
    MonotoneStage stage = MonotoneStage::I;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    AlphaStructure not_b;
    AlphaStructure not_a;
    int round = 0;

    int k() const { return not_b.rank; }
    int l() const { return not_a.rank; }

    friend bool operator==(const MonotoneState&, const MonotoneState&) = default;
};

// Same certificate for the reversed board: A and B swap, both structures dualize.
MonotoneState dual_state(const MonotoneState& s);

struct MonotoneReply {
    std::vector<Arc> arcs;
    MonotoneState state;
};

// `board` already contains `maker_arc`. Throws ArenaError(Forfeit) when a
// command meets a reverse arc and StructureExhausted when no fresh vertex is left.
MonotoneReply respond_monotone(const MonotoneState& state, const OrientationBoard& board, Arc maker_arc, int b);

// Stage properties checked against the board. b <= 0 skips the bias-dependent checks.
Violations check_monotone_invariants(const MonotoneState& state, const OrientationBoard& board, int b = 0);

// Spine v_1..v_k, each beating every later vertex, plus an apex from which
// every remaining directed arc outside the spine starts.
struct TrivialState {
    std::vector<Vertex> spine;
    std::optional<Vertex> apex;

    friend bool operator==(const TrivialState&, const TrivialState&) = default;
};

struct TrivialReply {
    std::vector<Arc> arcs;
    TrivialState state;
};

// Restores the spine/apex shape, then spends the rest of the budget on arcs that
// keep it, up to min(b, undirected pairs).
TrivialReply respond_trivial(const TrivialState& state, const OrientationBoard& board, Arc maker_arc, int b);

Violations check_trivial_invariant(const TrivialState& state, const OrientationBoard& board);

}  // namespace arena
