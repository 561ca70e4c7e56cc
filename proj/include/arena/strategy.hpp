#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "arena/board.hpp"
#include "arena/serialize.hpp"

namespace arena {

// An OBreaker strategy bound to one game (n, b, rules).
class BreakerStrategy {
public:
    virtual ~BreakerStrategy() = default;

    virtual std::string_view name() const = 0;

    // `board` already contains `maker_arc`. Returns the arcs in emission order;
    // throws ArenaError when the strategy cannot continue.
    virtual std::vector<Arc> respond(const OrientationBoard& board, Arc maker_arc) = 0;

    virtual std::unique_ptr<BreakerStrategy> clone() const = 0;

    // Validates the carried certificate against the board after a reply.
    virtual Violations check(const OrientationBoard&) const { return {}; }

    // Partition summary for transcripts and the service; null when there is none.
    virtual json certificate() const { return nullptr; }
};

struct BreakerOptions {
    int n = 0;
    int b = 0;
    Rules rules = Rules::Monotone;
    bool verify = false;  // re-check certificates inside every reply
};

// "alpha-monotone", "riskless-strict", "trivial", "naive".
// Throws ArenaError(InvalidConfig) for an unknown name.
std::unique_ptr<BreakerStrategy> make_breaker(std::string_view name, const BreakerOptions& opts);

const std::vector<std::string>& breaker_names();

}  // namespace arena
