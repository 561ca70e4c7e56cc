#pragma once

#include <vector>

#include "arena/board.hpp"

namespace arena {

// Certificate carried through the first stage of the strict game.
// a_star = v_1..v_r and b_star = w_1..w_r in enumeration order.
struct RisklessState {
    std::vector<Vertex> a_star;
    std::vector<Vertex> a_zero;
    std::vector<Vertex> b_star;
    std::vector<Vertex> b_zero;

    friend bool operator==(const RisklessState&, const RisklessState&) = default;
};

// Certificate for the second stage. The A side enumerates v_1..v_{k1} as
// a_almost followed by v_{k1+1}..v_{k1+k2} as a_star; the B side enumerates
// w_1..w_{l2} as b_star followed by w_{l2+1}..w_{l2+l1} as b_almost.
struct ProtectedState {
    std::vector<Vertex> a_dead;
    std::vector<Vertex> a_almost;
    std::vector<Vertex> a_star;
    std::vector<Vertex> a_zero;
    std::vector<Vertex> b_dead;
    std::vector<Vertex> b_star;
    std::vector<Vertex> b_almost;
    std::vector<Vertex> b_zero;

    friend bool operator==(const ProtectedState&, const ProtectedState&) = default;
};

// Properties R1-R4 for rank r.
Violations verify_riskless(const OrientationBoard& board, const RisklessState& state, int rank);

// Properties P1-P6.
Violations verify_protected(const OrientationBoard& board, const ProtectedState& state);

struct SizeBounds {
    int size_a = 0;
    int size_b = 0;
    int size_xa = 0;  // outside A and B, no arc from A
    int size_yb = 0;  // outside A and B, no arc into B
    bool ok = false;
};

SizeBounds size_bounds(const OrientationBoard& board, const RisklessState& state);

// Relabels a rank floor(n/25) riskless certificate as a protected one.
// Throws ArenaError(TransitionFailed) when the result does not verify.
ProtectedState transition(const OrientationBoard& board, const RisklessState& state);

RisklessState dual_state(const RisklessState& s);
ProtectedState dual_state(const ProtectedState& s);

bool protected_is_acyclic(const OrientationBoard& board, const ProtectedState& state);

// Whether the end-of-stage-one edge count forces the buffer sets to be large
// enough for the relabelling to verify, for r = floor(n/25), b = ceil(19n/20).
bool transition_size_forced(int n);

// Smallest n >= 60 with transition_size_forced(n).
int minimal_transition_n();

}  // namespace arena
