#include "arena/view.hpp"

namespace arena {

bool MoveLog::command(Arc a)
{
    if (a.is_loop()) throw ArenaError(ErrorKind::ProcedureBroken, "strategy asked for loop " + to_string(a));
    switch (view_.direct(a)) {
    case DirectOutcome::Directed:
        emitted_.push_back(view_.to_board(a));
        return true;
    case DirectOutcome::AlreadyPresent:
        return false;
    case DirectOutcome::ReverseConflict:
        break;
    }
    throw ArenaError(ErrorKind::Forfeit, "reverse of " + to_string(view_.to_board(a)) + " already directed");
}

}  // namespace arena
