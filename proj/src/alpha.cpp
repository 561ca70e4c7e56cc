#include "arena/alpha.hpp"

#include <algorithm>
#include <limits>

namespace arena {

ArcSet::ArcSet(int bound) : bound_(bound)
{
    if (bound < 0) throw ArenaError(ErrorKind::InvalidArgument, "negative arc set bound");
    bits_.assign(static_cast<std::size_t>(bound_) * bound_, 0);
}

ArcSet::ArcSet(int bound, std::span<const Arc> arcs) : ArcSet(bound)
{
    for (Arc a : arcs) insert(a);
}

ArcSet::ArcSet(std::initializer_list<Arc> arcs)
{
    int bound = 0;
    for (Arc a : arcs) bound = std::max({bound, a.tail + 1, a.head + 1});
    *this = ArcSet(bound, std::span<const Arc>(arcs.begin(), arcs.size()));
}

bool ArcSet::contains(Arc a) const
{
    if (a.tail < 0 || a.head < 0 || a.tail >= bound_ || a.head >= bound_) return false;
    return bits_[static_cast<std::size_t>(a.tail) * bound_ + a.head] != 0;
}

bool ArcSet::insert(Arc a)
{
    if (a.is_loop()) throw ArenaError(ErrorKind::LoopRejected, "loop " + to_string(a));
    if (a.tail < 0 || a.head < 0 || a.tail >= bound_ || a.head >= bound_)
        throw ArenaError(ErrorKind::InvalidArgument, "arc " + to_string(a) + " outside arc set bound");
    auto& bit = bits_[static_cast<std::size_t>(a.tail) * bound_ + a.head];
    if (bit) return false;
    bit = 1;
    ++size_;
    return true;
}

bool ArcSet::erase(Arc a)
{
    if (!contains(a)) return false;
    bits_[static_cast<std::size_t>(a.tail) * bound_ + a.head] = 0;
    --size_;
    return true;
}

std::vector<Arc> ArcSet::arcs() const
{
    std::vector<Arc> out;
    out.reserve(size_);
    for (Vertex u = 0; u < bound_; ++u)
        for (Vertex v = 0; v < bound_; ++v)
            if (bits_[static_cast<std::size_t>(u) * bound_ + v]) out.push_back({u, v});
    return out;
}

ArcSet arcs_within(const OrientationBoard& board, const std::vector<char>& keep)
{
    ArcSet out(board.n());
    for (Vertex u = 0; u < board.n(); ++u) {
        if (!keep[u]) continue;
        for (Vertex v = 0; v < board.n(); ++v)
            if (keep[v] && board.has_arc(u, v)) out.insert({u, v});
    }
    return out;
}

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

int vertex_bound(std::span<const Arc> decisive)
{
    int bound = 0;
    for (Arc a : decisive) bound = std::max({bound, a.tail + 1, a.head + 1});
    return bound;
}

// (x, y) is in the image iff the first decisive arc leaving x comes no later
// than the last decisive arc entering y.
struct ImageIndex {
    std::vector<int> first_tail;
    std::vector<int> last_head;

    explicit ImageIndex(std::span<const Arc> decisive, int bound)
        : first_tail(bound, kNone), last_head(bound, -1)
    {
        for (int i = 0; i < static_cast<int>(decisive.size()); ++i) {
            first_tail[decisive[i].tail] = std::min(first_tail[decisive[i].tail], i);
            last_head[decisive[i].head] = i;
        }
    }

    bool contains(Arc a) const
    {
        int bound = static_cast<int>(first_tail.size());
        if (a.tail < 0 || a.head < 0 || a.tail >= bound || a.head >= bound) return false;
        return first_tail[a.tail] != kNone && first_tail[a.tail] <= last_head[a.head];
    }

    std::optional<Vertex> loop() const
    {
        for (Vertex x = 0; x < static_cast<Vertex>(first_tail.size()); ++x)
            if (contains({x, x})) return x;
        return std::nullopt;
    }
};

// Vertices reachable from x along decisive arcs (forward) or reaching x (backward), x included.
std::vector<char> decisive_reach(std::span<const Arc> decisive, Vertex x, int bound, bool forward)
{
    std::vector<char> seen(std::max(bound, x + 1), 0);
    std::vector<Vertex> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Arc a : decisive) {
            Vertex from = forward ? a.tail : a.head;
            Vertex to = forward ? a.head : a.tail;
            if (from == u && !seen[to]) {
                seen[to] = 1;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<Arc> alpha_image(std::span<const Arc> decisive)
{
    const int bound = vertex_bound(decisive);
    ImageIndex index(decisive, bound);
    if (auto x = index.loop())
        throw ArenaError(ErrorKind::InvalidDecisive, "image contains the loop at vertex " + std::to_string(*x));
    std::vector<Arc> out;
    for (Vertex x = 0; x < bound; ++x)
        for (Vertex y = 0; y < bound; ++y)
            if (index.contains({x, y})) out.push_back({x, y});
    return out;
}

std::optional<Violation> verify_alpha(const ArcSet& d, std::span<const Arc> decisive, int rank)
{
    if (static_cast<int>(decisive.size()) > rank)
        return Violation{"rank", std::to_string(decisive.size()) + " decisive arcs exceed rank " + std::to_string(rank)};
    for (Arc a : d.arcs())
        if (d.contains(a.reversed())) return Violation{"reverse-free", "both " + to_string(a) + " and its reverse"};

    const int bound = std::max(vertex_bound(decisive), d.bound());
    ImageIndex index(decisive, bound);
    if (auto x = index.loop()) return Violation{"image-loop", "alpha image contains a loop at " + std::to_string(*x)};
    for (Vertex x = 0; x < bound; ++x)
        for (Vertex y = 0; y < bound; ++y)
            if (index.contains({x, y}) && !d.contains({x, y}))
                return Violation{"image-in-D", to_string({x, y}) + " is in the alpha image but not in D"};
    for (Arc a : d.arcs())
        if (!index.contains(a)) return Violation{"surjective", to_string(a) + " is in D but not in the alpha image"};
    return std::nullopt;
}

std::vector<int> in_set(std::span<const Arc> decisive, Vertex x)
{
    auto reach = decisive_reach(decisive, x, vertex_bound(decisive), false);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(decisive.size()); ++i)
        if (reach[decisive[i].head]) out.push_back(i);
    return out;
}

std::vector<int> out_set(std::span<const Arc> decisive, Vertex x)
{
    auto reach = decisive_reach(decisive, x, vertex_bound(decisive), true);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(decisive.size()); ++i)
        if (reach[decisive[i].tail]) out.push_back(i);
    return out;
}

AlphaAddition add_available_arc(const ArcSet& d, std::span<const Arc> decisive, int rank, Arc e)
{
    (void)rank;
    if (!d.is_available(e)) throw ArenaError(ErrorKind::NotAvailable, to_string(e) + " is not available");
    const int k = static_cast<int>(decisive.size());
    const Vertex v = e.tail;
    const Vertex w = e.head;

    auto out_w = out_set(decisive, w);
    const int ell = out_w.empty() ? k + 1 : out_w.front() + 1;

    AlphaAddition result;
    result.position = ell;
    ArcSet emitted(std::max({d.bound(), v + 1, w + 1}));
    for (int i = 1; i <= k; ++i) {
        const Arc& ei = decisive[i - 1];
        Arc f = i < ell ? Arc{ei.tail, w} : Arc{v, ei.head};
        if (f.is_loop()) throw ArenaError(ErrorKind::ProcedureBroken, "procedure produced loop " + to_string(f));
        if (f == e || d.contains(f)) continue;
        if (d.contains(f.reversed()) || f == e.reversed())
            throw ArenaError(ErrorKind::ProcedureBroken, "reverse of " + to_string(f) + " already present");
        if (emitted.insert(f)) result.f_arcs.push_back(f);
    }
    result.decisive.assign(decisive.begin(), decisive.end());
    result.decisive.insert(result.decisive.begin() + (ell - 1), e);
    return result;
}

std::vector<Arc> restrict_decisive(const ArcSet& d, std::span<const Arc> decisive, Vertex v)
{
    const int k = static_cast<int>(decisive.size());
    const int bound = std::max({vertex_bound(decisive), d.bound(), v + 1});
    // current S_{i-1}: f_1..f_{i-1} plus e_i..e_k
    ArcSet current(bound);
    for (Arc a : decisive) current.insert(a);
    auto in_restricted = [&](Arc g) { return g.tail != v && g.head != v && d.contains(g); };

    std::vector<Arc> out;
    for (int i = 0; i < k; ++i) {
        const Arc ei = decisive[i];
        std::optional<Arc> chosen;
        if (ei.tail != v && ei.head != v) {
            chosen = ei;
        } else {
            std::optional<Arc> best;
            auto consider = [&](Arc g) {
                if (g.is_loop() || !in_restricted(g) || current.contains(g)) return;
                if (!best || g < *best) best = g;
            };
            if (ei.tail == v) {
                for (int s = 0; s < i; ++s) consider({decisive[s].tail, ei.head});
            } else {
                for (int j = i + 1; j < k; ++j) consider({ei.tail, decisive[j].head});
            }
            chosen = best;
        }
        current.erase(ei);
        if (chosen) {
            current.insert(*chosen);
            out.push_back(*chosen);
        }
    }
    return out;
}

std::vector<Arc> dual_decisive(std::span<const Arc> decisive)
{
    std::vector<Arc> out;
    out.reserve(decisive.size());
    for (auto it = decisive.rbegin(); it != decisive.rend(); ++it) out.push_back(it->reversed());
    return out;
}

}  // namespace arena
