#include "arena/types.hpp"

namespace arena {

std::string to_string(Arc a)
{
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

std::string_view to_string(Player p)
{
    return p == Player::OMaker ? "OMaker" : "OBreaker";
}

std::string_view to_string(Rules r)
{
    return r == Rules::Monotone ? "monotone" : "strict";
}

Rules parse_rules(std::string_view s)
{
    if (s == "monotone") return Rules::Monotone;
    if (s == "strict") return Rules::Strict;
    throw ArenaError(ErrorKind::InvalidConfig, "unknown rules '" + std::string(s) + "'");
}

std::string_view to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::NotAvailable: return "NotAvailable";
    case ErrorKind::InvalidDecisive: return "InvalidDecisive";
    case ErrorKind::ProcedureBroken: return "ProcedureBroken";
    case ErrorKind::StructureExhausted: return "StructureExhausted";
    case ErrorKind::TransitionFailed: return "TransitionFailed";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
    case ErrorKind::Forfeit: return "Forfeit";
    case ErrorKind::NoMove: return "NoMove";
    case ErrorKind::Unsolved: return "Unsolved";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

ArenaError::ArenaError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace arena
