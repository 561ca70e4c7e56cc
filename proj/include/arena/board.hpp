#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arena/types.hpp"

namespace arena {

enum class DirectOutcome { Directed, AlreadyPresent, ReverseConflict };

// Orientation state of every pair of K_n. Each unordered pair {u,v} (u < v) is
// stored once: 0 undirected, 1 directed u->v, 2 directed v->u.
class OrientationBoard {
public:
    OrientationBoard() = default;
    explicit OrientationBoard(int n);

    int n() const { return n_; }
    std::int64_t pair_count() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }
    std::int64_t arc_count() const { return arcs_; }
    std::int64_t undirected_count() const { return pair_count() - arcs_; }
    bool is_full() const { return arcs_ == pair_count(); }

    bool has_arc(Vertex u, Vertex v) const;
    bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
    bool is_undirected(Vertex u, Vertex v) const;
    bool is_available(Arc a) const;

    // Throws ArenaError(LoopRejected) on a loop, ArenaError(InvalidArgument) on
    // an out-of-range vertex.
    DirectOutcome direct(Arc a);

    std::vector<Arc> arcs() const;
    std::vector<Arc> available() const;

    // Raw pair code in [0,3): used for hashing and solver encodings.
    std::uint8_t pair_code(Vertex u, Vertex v) const { return state_[index(u, v)]; }

    friend bool operator==(const OrientationBoard&, const OrientationBoard&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const;
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::int64_t arcs_ = 0;
    std::vector<std::uint8_t> state_;
};

OrientationBoard new_board(int n);
OrientationBoard reverse_board(const OrientationBoard& board);

bool has_cycle(const OrientationBoard& board);
std::vector<Arc> closing_arcs(const OrientationBoard& board);
bool is_transitive_tournament(const OrientationBoard& board,
                              std::optional<std::span<const Vertex>> subset = std::nullopt);

struct InducedBoard {
    OrientationBoard board;
    std::vector<Vertex> original;  // new id -> original id, increasing
};

InducedBoard induced(const OrientationBoard& board, std::span<const Vertex> subset);

// Shortest directed path length (in arcs) from `from` to every vertex, -1 if unreachable.
std::vector<int> distances_from(const OrientationBoard& board, Vertex from);

std::uint64_t board_hash(const OrientationBoard& board);
std::string hash_hex(std::uint64_t h);

}  // namespace arena
