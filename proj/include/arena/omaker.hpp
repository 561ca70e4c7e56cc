#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "arena/board.hpp"

namespace arena {

// An OMaker adversary. Implementations keep their own seeded generator and any
// path bookkeeping, so a fresh instance per game gives reproducible play.
class MakerStrategy {
public:
    virtual ~MakerStrategy() = default;

    virtual std::string_view name() const = 0;

    // Throws ArenaError(NoMove) when no pair is left.
    virtual Arc move(const OrientationBoard& board) = 0;

    virtual std::unique_ptr<MakerStrategy> clone() const = 0;
};

// "close-or-random", "close-or-longpath", "random", "max-threats", "longpath".
// Throws ArenaError(InvalidConfig) for anything else.
std::unique_ptr<MakerStrategy> make_maker(std::string_view name, std::uint64_t seed);

const std::vector<std::string>& maker_names();

// A closing arc that closes a shortest cycle, lexicographically first among those.
std::optional<Arc> shortest_closing_arc(const OrientationBoard& board);

// A topological order of an acyclic board, smallest available vertex first.
std::vector<Vertex> topological_order(const OrientationBoard& board);

// Reverses closing arcs (lexicographic) up to b. Under monotone rules an empty
// answer becomes a single safe arc; under strict rules the reply is padded with
// safe arcs up to min(b, undirected pairs).
std::vector<Arc> naive_obreaker(const OrientationBoard& board, int b, Rules rules);

}  // namespace arena
