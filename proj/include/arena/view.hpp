#pragma once

#include <vector>

#include "arena/board.hpp"

namespace arena {

// A board seen either as is or with every arc reversed. Strategies written for
// the primal orientation run unchanged on the dual through this view.
class OrientedView {
public:
    OrientedView(OrientationBoard& board, bool flipped) : board_(&board), flipped_(flipped) {}

    int n() const { return board_->n(); }
    bool flipped() const { return flipped_; }
    bool has_arc(Vertex u, Vertex v) const { return flipped_ ? board_->has_arc(v, u) : board_->has_arc(u, v); }
    bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
    bool is_undirected(Vertex u, Vertex v) const { return board_->is_undirected(u, v); }
    Arc to_board(Arc a) const { return flipped_ ? a.reversed() : a; }
    DirectOutcome direct(Arc a) { return board_->direct(to_board(a)); }
    std::int64_t arc_count() const { return board_->arc_count(); }
    bool is_full() const { return board_->is_full(); }
    const OrientationBoard& board() const { return *board_; }

private:
    OrientationBoard* board_;
    bool flipped_;
};

// Executes strategy commands against a scratch board. Commands for arcs that
// are already present are skipped; a reverse conflict forfeits.
class MoveLog {
public:
    explicit MoveLog(OrientedView view) : view_(view) {}

    OrientedView& view() { return view_; }
    const OrientedView& view() const { return view_; }

    // Returns true when the arc was newly directed.
    bool command(Arc a);

    const std::vector<Arc>& emitted() const { return emitted_; }
    int count() const { return static_cast<int>(emitted_.size()); }

private:
    OrientedView view_;
    std::vector<Arc> emitted_;  // board orientation
};

}  // namespace arena
