#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "arena/board.hpp"

namespace arena {

// Square bit matrix with one 64-bit-word row per vertex.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n);

    int n() const { return n_; }
    int words() const { return words_; }

    bool test(int r, int c) const { return (bits_[row_offset(r) + (c >> 6)] >> (c & 63)) & 1u; }
    void set(int r, int c) { bits_[row_offset(r) + (c >> 6)] |= std::uint64_t{1} << (c & 63); }
    std::uint64_t* row(int r) { return bits_.data() + row_offset(r); }
    const std::uint64_t* row(int r) const { return bits_.data() + row_offset(r); }
    int row_count(int r) const;

private:
    std::size_t row_offset(int r) const { return static_cast<std::size_t>(r) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// reach.test(u, v) iff there is a directed path of length >= 1 from u to v.
BitMatrix reachability(const OrientationBoard& board);

// Score of every ordered pair for the max-threats adversary.
//   kUnavailable  pair already directed (or a loop)
//   kClosing      the arc closes a cycle right away
//   otherwise     |closing_arcs(board + arc)|
struct ThreatScores {
    static constexpr int kUnavailable = -1;
    static constexpr int kClosing = std::numeric_limits<int>::max();

    int n = 0;
    std::vector<int> score;

    int at(Arc a) const { return score[static_cast<std::size_t>(a.tail) * n + a.head]; }
};

// Brute force: applies each available arc to a copy and counts closing arcs.
ThreatScores threat_scores_reference(const OrientationBoard& board);

// Bitset kernel, parallel over arc tails. Requires an acyclic board.
// threads <= 0 keeps the OpenMP default.
ThreatScores threat_scores(const OrientationBoard& board, int threads = 0);

}  // namespace arena
