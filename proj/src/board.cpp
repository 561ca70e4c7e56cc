#include "arena/board.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>

#include "arena/kernels.hpp"

namespace arena {

OrientationBoard::OrientationBoard(int n) : n_(n)
{
    if (n < 0) throw ArenaError(ErrorKind::InvalidArgument, "negative vertex count");
    state_.assign(static_cast<std::size_t>(pair_count()), 0);
}

void OrientationBoard::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw ArenaError(ErrorKind::InvalidArgument,
                         "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
}

std::size_t OrientationBoard::index(Vertex u, Vertex v) const
{
    if (u > v) std::swap(u, v);
    auto uu = static_cast<std::size_t>(u);
    return uu * (2 * static_cast<std::size_t>(n_) - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

bool OrientationBoard::has_arc(Vertex u, Vertex v) const
{
    if (u == v) return false;
    auto s = state_[index(u, v)];
    return u < v ? s == 1 : s == 2;
}

bool OrientationBoard::is_undirected(Vertex u, Vertex v) const
{
    return u != v && state_[index(u, v)] == 0;
}

bool OrientationBoard::is_available(Arc a) const
{
    if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_) return false;
    return is_undirected(a.tail, a.head);
}

DirectOutcome OrientationBoard::direct(Arc a)
{
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.is_loop()) throw ArenaError(ErrorKind::LoopRejected, "loop " + to_string(a));
    auto& s = state_[index(a.tail, a.head)];
    std::uint8_t want = a.tail < a.head ? 1 : 2;
    if (s == want) return DirectOutcome::AlreadyPresent;
    if (s != 0) return DirectOutcome::ReverseConflict;
    s = want;
    ++arcs_;
    return DirectOutcome::Directed;
}

std::vector<Arc> OrientationBoard::arcs() const
{
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(arcs_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.push_back({u, v});
    return out;
}

std::vector<Arc> OrientationBoard::available() const
{
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(2 * undirected_count()));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (is_undirected(u, v)) out.push_back({u, v});
    return out;
}

OrientationBoard new_board(int n)
{
    if (n < 1) throw ArenaError(ErrorKind::InvalidArgument, "a board needs at least one vertex");
    return OrientationBoard(n);
}

OrientationBoard reverse_board(const OrientationBoard& board)
{
    OrientationBoard out(board.n());
    for (Arc a : board.arcs()) out.direct(a.reversed());
    return out;
}

bool has_cycle(const OrientationBoard& board)
{
    const int n = board.n();
    std::vector<int> indegree(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (board.has_arc(u, v)) ++indegree[v];
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        for (Vertex v = 0; v < n; ++v)
            if (board.has_arc(u, v) && --indegree[v] == 0) queue.push_back(v);
    }
    return static_cast<int>(queue.size()) != n;
}

std::vector<Arc> closing_arcs(const OrientationBoard& board)
{
    std::vector<Arc> out;
    if (board.arc_count() < 2) return out;
    BitMatrix reach = reachability(board);
    for (Vertex v = 0; v < board.n(); ++v)
        for (Vertex w = 0; w < board.n(); ++w)
            if (board.is_undirected(v, w) && reach.test(w, v)) out.push_back({v, w});
    return out;
}

bool is_transitive_tournament(const OrientationBoard& board, std::optional<std::span<const Vertex>> subset)
{
    std::vector<Vertex> vs;
    if (subset) {
        vs.assign(subset->begin(), subset->end());
    } else {
        vs.resize(board.n());
        for (Vertex v = 0; v < board.n(); ++v) vs[v] = v;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] != vs[j] && board.is_undirected(vs[i], vs[j])) return false;
    return !has_cycle(induced(board, vs).board);
}

InducedBoard induced(const OrientationBoard& board, std::span<const Vertex> subset)
{
    InducedBoard out;
    out.original.assign(subset.begin(), subset.end());
    std::sort(out.original.begin(), out.original.end());
    out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
    const int m = static_cast<int>(out.original.size());
    out.board = OrientationBoard(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (board.has_arc(out.original[i], out.original[j])) out.board.direct({i, j});
    return out;
}

std::vector<int> distances_from(const OrientationBoard& board, Vertex from)
{
    std::vector<int> dist(board.n(), -1);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v = 0; v < board.n(); ++v) {
            if (dist[v] < 0 && board.has_arc(u, v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::uint64_t board_hash(const OrientationBoard& board)
{
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (int shift = 0; shift < 32; shift += 8) mix((static_cast<std::uint32_t>(board.n()) >> shift) & 0xff);
    for (Vertex u = 0; u < board.n(); ++u)
        for (Vertex v = u + 1; v < board.n(); ++v) mix(board.pair_code(u, v));
    return h;
}

std::string hash_hex(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace arena
