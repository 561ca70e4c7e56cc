#include "arena/monotone_breaker.hpp"

#include <algorithm>

#include "arena/view.hpp"

namespace arena {

std::string_view to_string(MonotoneStage s)
{
    switch (s) {
    case MonotoneStage::I: return "I";
    case MonotoneStage::II: return "II";
    case MonotoneStage::III: return "III";
    }
    return "?";
}

MonotoneState dual_state(const MonotoneState& s)
{
    MonotoneState d;
    d.stage = s.stage;
    d.a = s.b;
    d.b = s.a;
    d.not_b = {dual_decisive(s.not_a.decisive), s.not_a.rank};
    d.not_a = {dual_decisive(s.not_b.decisive), s.not_b.rank};
    d.round = s.round;
    return d;
}

namespace {

std::vector<char> mask_of(const std::vector<Vertex>& vs, int n)
{
    std::vector<char> m(n, 0);
    for (Vertex v : vs) m[v] = 1;
    return m;
}

ArcSet view_arcs_within(const OrientedView& view, const std::vector<char>& keep)
{
    ArcSet out(view.n());
    for (Vertex u = 0; u < view.n(); ++u) {
        if (!keep[u]) continue;
        for (Vertex v = 0; v < view.n(); ++v)
            if (keep[v] && view.has_arc(u, v)) out.insert({u, v});
    }
    return out;
}

ArcSet image_set(const AlphaStructure& s, int n)
{
    auto image = alpha_image(s.decisive);
    return ArcSet(n, image);
}

// One OBreaker move in the primal orientation of `log`'s view: the maker arc
// lies inside V \ B.
class PrimalMove {
public:
    PrimalMove(MonotoneState& state, MoveLog& log)
        : st_(state), log_(log), n_(log.view().n()),
          in_a_(mask_of(state.a, n_)), in_b_(mask_of(state.b, n_)), reserved_(n_, 0)
    {
    }

    void run(Arc e)
    {
        absorb_into_not_b(e, /*direct_e=*/false);
        switch (st_.stage) {
        case MonotoneStage::I: stage_one(e); break;
        case MonotoneStage::II: stage_two(e); break;
        case MonotoneStage::III: break;
        }
        if (log_.count() == 0 && st_.a.size() + st_.b.size() == static_cast<std::size_t>(n_))
            arbitrary_arc();
    }

private:
    std::optional<Vertex> lowest_fresh(bool honour_reserved) const
    {
        for (Vertex x = 0; x < n_; ++x)
            if (!in_a_[x] && !in_b_[x] && !(honour_reserved && reserved_[x])) return x;
        return std::nullopt;
    }

    Vertex take_fresh()
    {
        auto x = lowest_fresh(true);
        if (!x) throw ArenaError(ErrorKind::StructureExhausted, "no fresh vertex outside A and B");
        reserved_[*x] = 1;
        return *x;
    }

    void join_a(Vertex x)
    {
        ArcSet d = image_set(st_.not_a, n_);
        st_.not_a.decisive = restrict_decisive(d, st_.not_a.decisive, x);
        st_.a.push_back(x);
        in_a_[x] = 1;
    }

    void join_b(Vertex y)
    {
        ArcSet d = image_set(st_.not_b, n_);
        st_.not_b.decisive = restrict_decisive(d, st_.not_b.decisive, y);
        st_.b.push_back(y);
        in_b_[y] = 1;
    }

    void dominate_b(Vertex x)
    {
        for (Vertex y : st_.b) log_.command({x, y});
    }

    // Adds an arc inside V \ B to the structure there. With direct_e the arc
    // is OBreaker's own and gets directed first.
    void absorb_into_not_b(Arc e, bool direct_e)
    {
        std::vector<char> keep(n_);
        for (Vertex x = 0; x < n_; ++x) keep[x] = !in_b_[x];
        ArcSet d = view_arcs_within(log_.view(), keep);
        d.erase(e);
        auto add = add_available_arc(d, st_.not_b.decisive, st_.not_b.rank, e);
        if (direct_e) log_.command(e);
        for (Arc f : add.f_arcs) log_.command(f);
        st_.not_b.decisive = std::move(add.decisive);
        ++st_.not_b.rank;
    }

    void absorb_into_not_a(Arc e)
    {
        std::vector<char> keep(n_);
        for (Vertex x = 0; x < n_; ++x) keep[x] = !in_a_[x];
        ArcSet d = view_arcs_within(log_.view(), keep);
        auto add = add_available_arc(d, st_.not_a.decisive, st_.not_a.rank, e);
        log_.command(e);
        for (Arc f : add.f_arcs) log_.command(f);
        st_.not_a.decisive = std::move(add.decisive);
        ++st_.not_a.rank;
    }

    void stage_one(Arc e)
    {
        reserved_[e.tail] = reserved_[e.head] = 1;
        std::vector<Vertex> joining;
        if (!in_a_[e.tail]) {
            joining = {e.tail, take_fresh()};
        } else {
            Vertex v2 = take_fresh();
            joining = {v2, take_fresh()};
        }
        for (Vertex x : joining) dominate_b(x);
        for (Vertex x : joining) join_a(x);
        Vertex y = take_fresh();
        std::vector<Vertex> a = st_.a;
        for (Vertex x : a) log_.command({x, y});
        join_b(y);
    }

    void stage_two(Arc e)
    {
        Vertex joining = e.tail;
        if (in_a_[e.tail]) {
            reserved_[e.head] = 1;
            auto x = lowest_fresh(true);
            if (!x) x = lowest_fresh(false);
            if (!x) throw ArenaError(ErrorKind::StructureExhausted, "no fresh vertex for A");
            joining = *x;
        }
        dominate_b(joining);
        join_a(joining);
        // Every commanded arc was already present: keep growing A until
        // something is directed or nothing is left outside A and B.
        while (log_.count() == 0) {
            auto x = lowest_fresh(false);
            if (!x) break;
            dominate_b(*x);
            join_a(*x);
        }
    }

    // Stage III with nothing to direct: one arbitrary available arc inside A,
    // else inside B, absorbed into the structure on that side.
    void arbitrary_arc()
    {
        const auto& view = log_.view();
        for (int side = 0; side < 2; ++side) {
            const auto& part = side == 0 ? st_.a : st_.b;
            std::vector<Vertex> sorted = part;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                    if (!view.is_undirected(sorted[i], sorted[j])) continue;
                    Arc pick{sorted[i], sorted[j]};
                    if (side == 0)
                        absorb_into_not_b(pick, /*direct_e=*/true);
                    else
                        absorb_into_not_a(pick);
                    return;
                }
            }
        }
    }

    MonotoneState& st_;
    MoveLog& log_;
    int n_;
    std::vector<char> in_a_;
    std::vector<char> in_b_;
    std::vector<char> reserved_;
};

}  // namespace

MonotoneReply respond_monotone(const MonotoneState& state, const OrientationBoard& board, Arc maker_arc, int b)
{
    (void)b;
    if (!board.has_arc(maker_arc))
        throw ArenaError(ErrorKind::InvalidArgument, "maker arc " + to_string(maker_arc) + " is not on the board");
    const int n = board.n();
    auto in_b = mask_of(state.b, n);
    const bool flip = in_b[maker_arc.tail] || in_b[maker_arc.head];

    OrientationBoard scratch = board;
    MoveLog log(OrientedView(scratch, flip));
    MonotoneState work = flip ? dual_state(state) : state;
    PrimalMove(work, log).run(flip ? maker_arc.reversed() : maker_arc);

    MonotoneReply reply{log.emitted(), flip ? dual_state(work) : work};
    MonotoneState& s = reply.state;
    ++s.round;
    if (s.stage == MonotoneStage::I) {
        const int slack = static_cast<int>(s.a.size()) - s.k();
        if (6 * slack >= n) s.stage = MonotoneStage::II;
    } else if (s.stage == MonotoneStage::II && s.a.size() + s.b.size() == static_cast<std::size_t>(n)) {
        s.stage = MonotoneStage::III;
    }
    return reply;
}

Violations check_monotone_invariants(const MonotoneState& state, const OrientationBoard& board, int b)
{
    Violations out;
    const int n = board.n();
    const std::string stage = "S" + std::string(state.stage == MonotoneStage::I    ? "1"
                                                : state.stage == MonotoneStage::II ? "2"
                                                                                   : "3");
    auto in_a = mask_of(state.a, n);
    auto in_b = mask_of(state.b, n);
    for (Vertex v : state.a)
        if (in_b[v]) out.push_back({"UDB", "vertex " + std::to_string(v) + " lies in both A and B"});
    auto missing = [&]() -> std::optional<Arc> {
        for (Vertex x : state.a)
            for (Vertex y : state.b)
                if (!board.has_arc(x, y)) return Arc{x, y};
        return std::nullopt;
    }();
    if (missing) out.push_back({"UDB", "missing arc " + to_string(*missing)});

    std::vector<char> not_b(n), not_a(n);
    for (Vertex x = 0; x < n; ++x) {
        not_b[x] = !in_b[x];
        not_a[x] = !in_a[x];
    }
    ArcSet d_not_b = arcs_within(board, not_b);
    ArcSet d_not_a = arcs_within(board, not_a);
    if (auto v = verify_alpha(d_not_b, state.not_b.decisive, state.not_b.rank))
        out.push_back({stage + ".1", "D(V\\B): " + v->property + ": " + v->detail});
    for (Arc a : d_not_b.arcs())
        if (!in_a[a.tail]) {
            out.push_back({stage + ".1", "arc " + to_string(a) + " in V\\B has its tail outside A"});
            break;
        }
    if (auto v = verify_alpha(d_not_a, state.not_a.decisive, state.not_a.rank))
        out.push_back({stage + ".2", "D(V\\A): " + v->property + ": " + v->detail});
    for (Arc a : d_not_a.arcs())
        if (!in_b[a.head]) {
            out.push_back({stage + ".2", "arc " + to_string(a) + " in V\\A has its head outside B"});
            break;
        }

    const int a_size = static_cast<int>(state.a.size());
    const int b_size = static_cast<int>(state.b.size());
    switch (state.stage) {
    case MonotoneStage::I:
        if (state.k() + state.l() != state.round)
            out.push_back({"S1.3", "k + l = " + std::to_string(state.k() + state.l()) + " but r = " +
                                       std::to_string(state.round)});
        if (a_size - state.k() != state.round || b_size - state.l() != state.round)
            out.push_back({"S1.4", "|A|-k = " + std::to_string(a_size - state.k()) + ", |B|-l = " +
                                       std::to_string(b_size - state.l()) + ", r = " + std::to_string(state.round)});
        break;
    case MonotoneStage::II:
        if (6 * (a_size - state.k()) < n || 6 * (b_size - state.l()) < n)
            out.push_back({"S2.3", "|A|-k or |B|-l dropped below n/6"});
        if (b > 0 && 6 * (n - b) > n) out.push_back({"S2.3", "n/6 < n-b"});
        break;
    case MonotoneStage::III:
        if (a_size + b_size != n) out.push_back({"S3", "A and B do not cover V"});
        if (b > 0 && (a_size > b || b_size > b)) out.push_back({"S3.3", "|A| or |B| exceeds b"});
        break;
    }
    return out;
}

namespace {

class TrivialMove {
public:
    TrivialMove(TrivialState& state, MoveLog& log)
        : st_(state), log_(log), n_(log.view().n()), in_spine_(mask_of(state.spine, n_))
    {
    }

    void fix(Arc e)
    {
        if (in_spine_[e.tail] || in_spine_[e.head])
            throw ArenaError(ErrorKind::InvariantBreach, "maker arc " + to_string(e) + " touches the spine");
        if (!st_.apex) {
            st_.apex = e.tail;
        } else if (*st_.apex == e.tail) {
            // arc already starts at the apex
        } else if (*st_.apex == e.head) {
            dominate_rest(e.tail);
            promote(e.tail);
        } else {
            Vertex old = *st_.apex;
            dominate_rest(old);
            promote(old);
            st_.apex = e.tail;
        }
    }

    void fill(int want)
    {
        while (log_.count() < want) {
            if (st_.apex) {
                Vertex apex = *st_.apex;
                std::optional<Vertex> target;
                for (Vertex z = 0; z < n_ && !target; ++z)
                    if (!in_spine_[z] && z != apex && log_.view().is_undirected(apex, z)) target = z;
                if (target) {
                    log_.command({apex, *target});
                    continue;
                }
                promote(apex);
                st_.apex.reset();
                continue;
            }
            auto pair = first_open_pair();
            if (!pair) return;
            log_.command(*pair);
            st_.apex = pair->tail;
        }
    }

private:
    void dominate_rest(Vertex x)
    {
        for (Vertex z = 0; z < n_; ++z)
            if (z != x && !in_spine_[z]) log_.command({x, z});
    }

    void promote(Vertex x)
    {
        st_.spine.push_back(x);
        in_spine_[x] = 1;
    }

    std::optional<Arc> first_open_pair() const
    {
        for (Vertex u = 0; u < n_; ++u) {
            if (in_spine_[u]) continue;
            for (Vertex v = u + 1; v < n_; ++v)
                if (!in_spine_[v] && log_.view().is_undirected(u, v)) return Arc{u, v};
        }
        return std::nullopt;
    }

    TrivialState& st_;
    MoveLog& log_;
    int n_;
    std::vector<char> in_spine_;
};

}  // namespace

TrivialReply respond_trivial(const TrivialState& state, const OrientationBoard& board, Arc maker_arc, int b)
{
    if (!board.has_arc(maker_arc))
        throw ArenaError(ErrorKind::InvalidArgument, "maker arc " + to_string(maker_arc) + " is not on the board");
    OrientationBoard scratch = board;
    MoveLog log(OrientedView(scratch, false));
    TrivialReply reply{{}, state};
    TrivialMove move(reply.state, log);
    move.fix(maker_arc);
    move.fill(static_cast<int>(std::min<std::int64_t>(b, board.undirected_count())));
    reply.arcs = log.emitted();
    return reply;
}

Violations check_trivial_invariant(const TrivialState& state, const OrientationBoard& board)
{
    Violations out;
    const int n = board.n();
    auto in_spine = mask_of(state.spine, n);
    for (std::size_t i = 0; i < state.spine.size(); ++i) {
        for (Vertex z = 0; z < n; ++z) {
            bool earlier = std::find(state.spine.begin(), state.spine.begin() + static_cast<long>(i) + 1, z) !=
                           state.spine.begin() + static_cast<long>(i) + 1;
            if (!earlier && !board.has_arc(state.spine[i], z)) {
                out.push_back({"spine", "v_" + std::to_string(i + 1) + " = " + std::to_string(state.spine[i]) +
                                            " does not beat " + std::to_string(z)});
                return out;
            }
        }
    }
    if (state.apex && in_spine[*state.apex]) out.push_back({"apex", "apex lies on the spine"});
    for (Arc a : board.arcs()) {
        if (in_spine[a.tail] || in_spine[a.head]) continue;
        if (!state.apex || *state.apex != a.tail) {
            out.push_back({"apex", "arc " + to_string(a) + " outside the spine does not start at the apex"});
            break;
        }
    }
    return out;
}

}  // namespace arena
