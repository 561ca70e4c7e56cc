#include "arena/omaker.hpp"

#include <algorithm>
#include <queue>

#include "arena/kernels.hpp"

namespace arena {

std::optional<Arc> shortest_closing_arc(const OrientationBoard& board)
{
    const auto closing = closing_arcs(board);
    std::optional<Arc> best;
    int best_len = 0;
    std::vector<std::vector<int>> dist(board.n());
    for (Arc a : closing) {
        auto& d = dist[a.head];
        if (d.empty()) d = distances_from(board, a.head);
        int len = d[a.tail];
        if (len < 0) continue;
        if (!best || len < best_len) {
            best = a;
            best_len = len;
        }
    }
    return best;
}

std::vector<Vertex> topological_order(const OrientationBoard& board)
{
    const int n = board.n();
    std::vector<int> indeg(n, 0);
    for (Arc a : board.arcs()) ++indeg[a.head];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<Vertex> order;
    while (!ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Vertex v = 0; v < n; ++v)
            if (board.has_arc(u, v) && --indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) throw ArenaError(ErrorKind::InvalidArgument, "board has a cycle");
    return order;
}

namespace {

Arc uniform_available(const OrientationBoard& board, std::mt19937_64& rng)
{
    const auto avail = board.available();
    if (avail.empty()) throw ArenaError(ErrorKind::NoMove, "board is full");
    std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
    return avail[pick(rng)];
}

class RandomMaker : public MakerStrategy {
public:
    explicit RandomMaker(std::uint64_t seed) : rng_(seed) {}
    std::string_view name() const override { return "random"; }
    Arc move(const OrientationBoard& board) override { return uniform_available(board, rng_); }
    std::unique_ptr<MakerStrategy> clone() const override { return std::make_unique<RandomMaker>(*this); }

private:
    std::mt19937_64 rng_;
};

class LongPathMaker : public MakerStrategy {
public:
    std::string_view name() const override { return "longpath"; }

    Arc move(const OrientationBoard& board) override
    {
        const int n = board.n();
        if (board.is_full()) throw ArenaError(ErrorKind::NoMove, "board is full");
        if (!path_.empty())
            if (auto next = extend(board)) return *next;
        // Restart from the lowest vertex that still has an available pair.
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y)
                if (board.is_available({x, y})) {
                    path_ = {x};
                    return take(y);
                }
        throw ArenaError(ErrorKind::NoMove, "board is full");
    }

    std::unique_ptr<MakerStrategy> clone() const override { return std::make_unique<LongPathMaker>(*this); }

private:
    std::optional<Arc> extend(const OrientationBoard& board)
    {
        const Vertex head = path_.back();
        for (Vertex y = 0; y < board.n(); ++y)
            if (std::find(path_.begin(), path_.end(), y) == path_.end() && board.is_available({head, y}))
                return take(y);
        return std::nullopt;
    }

    Arc take(Vertex y)
    {
        Arc a{path_.back(), y};
        path_.push_back(y);
        return a;
    }

    std::vector<Vertex> path_;
};

class CloseOrElse : public MakerStrategy {
public:
    CloseOrElse(std::string name, std::unique_ptr<MakerStrategy> inner)
        : name_(std::move(name)), inner_(std::move(inner))
    {
    }
    CloseOrElse(const CloseOrElse& o) : name_(o.name_), inner_(o.inner_->clone()) {}

    std::string_view name() const override { return name_; }

    Arc move(const OrientationBoard& board) override
    {
        if (auto c = shortest_closing_arc(board)) return *c;
        return inner_->move(board);
    }

    std::unique_ptr<MakerStrategy> clone() const override { return std::make_unique<CloseOrElse>(*this); }

private:
    std::string name_;
    std::unique_ptr<MakerStrategy> inner_;
};

class MaxThreatsMaker : public MakerStrategy {
public:
    std::string_view name() const override { return "max-threats"; }

    Arc move(const OrientationBoard& board) override
    {
        if (board.is_full()) throw ArenaError(ErrorKind::NoMove, "board is full");
        const auto scores = threat_scores(board);
        std::optional<Arc> best;
        int best_score = ThreatScores::kUnavailable;
        for (Vertex u = 0; u < board.n(); ++u)
            for (Vertex v = 0; v < board.n(); ++v) {
                int s = scores.at({u, v});
                if (s > best_score) {
                    best_score = s;
                    best = Arc{u, v};
                }
            }
        return *best;
    }

    std::unique_ptr<MakerStrategy> clone() const override { return std::make_unique<MaxThreatsMaker>(*this); }
};

}  // namespace

const std::vector<std::string>& maker_names()
{
    static const std::vector<std::string> names = {"close-or-random", "close-or-longpath", "random", "max-threats",
                                                   "longpath"};
    return names;
}

std::unique_ptr<MakerStrategy> make_maker(std::string_view name, std::uint64_t seed)
{
    if (name == "random") return std::make_unique<RandomMaker>(seed);
    if (name == "longpath") return std::make_unique<LongPathMaker>();
    if (name == "max-threats") return std::make_unique<MaxThreatsMaker>();
    if (name == "close-or-random")
        return std::make_unique<CloseOrElse>("close-or-random", std::make_unique<RandomMaker>(seed));
    if (name == "close-or-longpath")
        return std::make_unique<CloseOrElse>("close-or-longpath", std::make_unique<LongPathMaker>());
    throw ArenaError(ErrorKind::InvalidConfig, "unknown omaker strategy '" + std::string(name) + "'");
}

std::vector<Arc> naive_obreaker(const OrientationBoard& board, int b, Rules rules)
{
    std::vector<Arc> out;
    OrientationBoard scratch = board;
    for (Arc c : closing_arcs(board)) {
        if (static_cast<int>(out.size()) >= b) break;
        if (scratch.direct(c.reversed()) == DirectOutcome::Directed) out.push_back(c.reversed());
    }
    const long long want = rules == Rules::Strict ? std::min<long long>(b, board.undirected_count())
                                                  : std::min<long long>(1, board.undirected_count());
    if (static_cast<long long>(out.size()) >= want) return out;

    // Pad along a topological order so no padding arc closes a cycle.
    const auto order = topological_order(scratch);
    std::vector<int> rank(board.n());
    for (int i = 0; i < board.n(); ++i) rank[order[i]] = i;
    for (Vertex u = 0; u < board.n() && static_cast<long long>(out.size()) < want; ++u)
        for (Vertex v = u + 1; v < board.n() && static_cast<long long>(out.size()) < want; ++v) {
            if (!scratch.is_undirected(u, v)) continue;
            Arc a = rank[u] < rank[v] ? Arc{u, v} : Arc{v, u};
            scratch.direct(a);
            out.push_back(a);
        }
    return out;
}

}  // namespace arena
