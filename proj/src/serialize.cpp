#include "arena/serialize.hpp"

namespace arena {

json arc_to_json(Arc a)
{
    return json::array({a.tail, a.head});
}

Arc arc_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ArenaError(ErrorKind::InvalidArgument, "arc must be a [tail, head] pair: " + j.dump());
    return {j[0].get<Vertex>(), j[1].get<Vertex>()};
}

json arcs_to_json(std::span<const Arc> arcs)
{
    json out = json::array();
    for (Arc a : arcs) out.push_back(arc_to_json(a));
    return out;
}

std::vector<Arc> arcs_from_json(const json& j)
{
    if (!j.is_array()) throw ArenaError(ErrorKind::InvalidArgument, "expected an arc list");
    std::vector<Arc> out;
    out.reserve(j.size());
    for (const auto& a : j) out.push_back(arc_from_json(a));
    return out;
}

json board_to_json(const OrientationBoard& board)
{
    auto arcs = board.arcs();
    return {{"n", board.n()}, {"arcs", arcs_to_json(arcs)}};
}

OrientationBoard board_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ArenaError(ErrorKind::InvalidArgument, "board JSON needs an integer 'n'");
    OrientationBoard board(j["n"].get<int>());
    if (j.contains("arcs")) {
        for (Arc a : arcs_from_json(j["arcs"])) {
            if (board.direct(a) != DirectOutcome::Directed)
                throw ArenaError(ErrorKind::InvalidArgument, "duplicate or reversed arc " + to_string(a));
        }
    }
    return board;
}

}  // namespace arena
