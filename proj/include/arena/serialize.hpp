#pragma once

#include <span>
#include <vector>

#include "json.hpp"

#include "arena/board.hpp"

namespace arena {

using json = nlohmann::json;

json arc_to_json(Arc a);
Arc arc_from_json(const json& j);
json arcs_to_json(std::span<const Arc> arcs);
std::vector<Arc> arcs_from_json(const json& j);

// {"n": int, "arcs": [[tail, head], ...]} with arcs in lexicographic order.
json board_to_json(const OrientationBoard& board);
OrientationBoard board_from_json(const json& j);

}  // namespace arena
