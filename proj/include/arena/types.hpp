#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arena {

using Vertex = std::int32_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    constexpr Arc reversed() const { return {head, tail}; }
    constexpr bool is_loop() const { return tail == head; }

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(Arc a);

enum class Player { OMaker, OBreaker };
enum class Rules { Monotone, Strict };

std::string_view to_string(Player p);
std::string_view to_string(Rules r);
Rules parse_rules(std::string_view s);

enum class ErrorKind {
    InvalidArgument,
    LoopRejected,
    NotAvailable,
    InvalidDecisive,
    ProcedureBroken,
    StructureExhausted,
    TransitionFailed,
    InvariantBreach,
    Forfeit,
    NoMove,
    Unsolved,
    InvalidConfig,
};

std::string_view to_string(ErrorKind k);

class ArenaError : public std::runtime_error {
public:
    ArenaError(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// One failed check from a validator: which property and a human readable witness.
struct Violation {
    std::string property;
    std::string detail;
};

using Violations = std::vector<Violation>;

}  // namespace arena
