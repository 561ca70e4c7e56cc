#include "arena/strict_breaker.hpp"

#include <algorithm>
#include <optional>

namespace arena {

std::string_view to_string(StrictStage s)
{
    return s == StrictStage::I ? "I" : "II";
}

StrictState dual_state(const StrictState& s)
{
    StrictState d = s;
    d.riskless = dual_state(s.riskless);
    d.prot = dual_state(s.prot);
    return d;
}

namespace {

// Directs arcs on a scratch board, skipping arcs already present.
class Emitter {
public:
    explicit Emitter(OrientationBoard& board) : board_(board) {}

    bool put(Arc a)
    {
        if (a.is_loop()) throw ArenaError(ErrorKind::ProcedureBroken, "strategy asked for loop " + to_string(a));
        switch (board_.direct(a)) {
        case DirectOutcome::Directed:
            arcs_.push_back(a);
            return true;
        case DirectOutcome::AlreadyPresent:
            return false;
        case DirectOutcome::ReverseConflict:
            break;
        }
        throw ArenaError(ErrorKind::Forfeit, "reverse of " + to_string(a) + " already directed");
    }

    // Emits a family in lexicographic order.
    void family(std::vector<Arc> f)
    {
        std::sort(f.begin(), f.end());
        for (Arc a : f)
            if (!a.is_loop()) put(a);
    }

    std::vector<Arc>& arcs() { return arcs_; }

private:
    OrientationBoard& board_;
    std::vector<Arc> arcs_;
};

std::vector<char> membership(int n, std::initializer_list<const std::vector<Vertex>*> lists)
{
    std::vector<char> m(n, 0);
    for (auto* l : lists)
        for (Vertex v : *l) m[v] = 1;
    return m;
}

bool contains(const std::vector<Vertex>& s, Vertex v)
{
    return std::find(s.begin(), s.end(), v) != s.end();
}

void insert_sorted(std::vector<Vertex>& s, Vertex v)
{
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
}

void erase_value(std::vector<Vertex>& s, Vertex v)
{
    s.erase(std::remove(s.begin(), s.end(), v), s.end());
}

std::vector<Vertex> all_of(const RisklessState& s, bool a_side)
{
    std::vector<Vertex> out = a_side ? s.a_star : s.b_star;
    const auto& zero = a_side ? s.a_zero : s.b_zero;
    out.insert(out.end(), zero.begin(), zero.end());
    return out;
}

}  // namespace

StageReply base_one(OrientationBoard& board, const RisklessState& s, Arc e)
{
    const int n = board.n();
    const Vertex v = e.tail, w = e.head;
    const int r = static_cast<int>(s.a_star.size());
    const auto a = all_of(s, true);
    const auto b = all_of(s, false);
    const auto in_a = membership(n, {&s.a_star, &s.a_zero});
    const auto in_b = membership(n, {&s.b_star, &s.b_zero});
    const auto in_a0 = membership(n, {&s.a_zero});
    if (in_b[v] || in_b[w]) throw ArenaError(ErrorKind::InvalidArgument, "maker arc touches B");

    // Board as it was before the maker arc.
    auto had = [&](Vertex x, Vertex y) { return board.has_arc(x, y) && !(x == v && y == w); };
    auto rest = [&](Vertex z) { return !in_a[z] && !in_b[z]; };

    std::optional<Vertex> x_a, y_b;
    for (Vertex z = 0; z < n && !x_a; ++z) {
        if (!rest(z) || z == v || z == w) continue;
        bool hit = std::any_of(a.begin(), a.end(), [&](Vertex x) { return had(x, z); });
        if (!hit) x_a = z;
    }
    if (x_a)
        for (Vertex z = 0; z < n && !y_b; ++z) {
            if (!rest(z) || z == v || z == w || z == *x_a) continue;
            bool hit = std::any_of(b.begin(), b.end(), [&](Vertex y) { return had(z, y); });
            if (!hit) y_b = z;
        }
    if (!x_a || !y_b) throw ArenaError(ErrorKind::StructureExhausted, "no fresh vertex for the riskless base step");

    const Vertex u_s = contains(s.a_star, v) ? *x_a : v;
    const Vertex u_a = in_a[v] ? *x_a : v;
    int ell = r + 1;
    for (int i = 1; i <= r; ++i)
        if (!had(s.a_star[i - 1], v)) {
            ell = i;
            break;
        }

    std::vector<Vertex> vp = s.a_star;
    vp.insert(vp.begin() + (ell - 1), u_s);
    std::vector<Vertex> wp = s.b_star;
    wp.insert(wp.begin(), *y_b);
    auto V = [&](int i) { return vp[i - 1]; };

    std::vector<std::vector<Arc>> fam(7);
    for (Vertex y : b) fam[0].push_back({u_a, y});
    for (Vertex x : a) fam[1].push_back({x, *y_b});
    fam[1].push_back({u_a, *y_b});
    for (int i = 2; i <= r + 1; ++i) fam[2].push_back({*y_b, wp[i - 1]});
    for (int i = 1; i <= ell; ++i) fam[3].push_back({V(i), w});
    for (int i = 1; i < ell; ++i) fam[4].push_back({V(i), V(ell)});
    for (int i = ell + 1; i <= r + 1; ++i) fam[5].push_back({V(ell), V(i)});
    if (ell <= r)
        for (Vertex z = 0; z < n; ++z)
            if ((rest(z) || in_a0[z]) && had(V(ell + 1), z)) fam[6].push_back({V(ell), z});

    Emitter out(board);
    for (auto& f : fam) out.family(std::move(f));

    StageReply reply;
    reply.arcs = std::move(out.arcs());
    reply.riskless.a_star = std::move(vp);
    reply.riskless.a_zero = s.a_zero;
    insert_sorted(reply.riskless.a_zero, u_a);
    erase_value(reply.riskless.a_zero, u_s);
    reply.riskless.b_star = std::move(wp);
    reply.riskless.b_zero = s.b_zero;
    return reply;
}

StageReply add_edges_one(OrientationBoard& board, const RisklessState& s, int b)
{
    const int n = board.n();
    StageReply reply;
    reply.riskless = s;
    RisklessState& st = reply.riskless;
    const long long rank = static_cast<long long>(s.a_star.size());
    long long t = rank * (b + 1) - board.arc_count();
    if (t < 0) throw ArenaError(ErrorKind::InvariantBreach, "stage one arc ledger overshot");

    auto in_a = membership(n, {&st.a_star, &st.a_zero});
    auto in_b = membership(n, {&st.b_star, &st.b_zero});
    auto rest = [&](Vertex z) { return !in_a[z] && !in_b[z]; };
    auto size_a = [&] { return static_cast<long long>(st.a_star.size() + st.a_zero.size()); };
    auto size_b = [&] { return static_cast<long long>(st.b_star.size() + st.b_zero.size()); };
    auto big = [&] { return std::max(size_a(), size_b()); };

    Emitter out(board);
    // Lowest rest vertex with no arc from A (into_b false) or none into B (into_b true).
    auto fresh = [&](bool into_b) -> Vertex {
        for (Vertex z = 0; z < n; ++z) {
            if (!rest(z)) continue;
            bool hit = false;
            for (Vertex x = 0; x < n && !hit; ++x)
                hit = into_b ? (in_b[x] && board.has_arc(z, x)) : (in_a[x] && board.has_arc(x, z));
            if (!hit) return z;
        }
        throw ArenaError(ErrorKind::StructureExhausted, "no fresh vertex for the riskless top-up");
    };

    while (t > 0 && t >= big()) {
        if (size_b() == size_a() - 1) {
            Vertex y = fresh(true);
            for (Vertex x = 0; x < n; ++x)
                if (in_a[x] && out.put({x, y})) --t;
            in_b[y] = 1;
            insert_sorted(st.b_zero, y);
        } else {
            Vertex x = fresh(false);
            for (Vertex y = 0; y < n; ++y)
                if (in_b[y] && out.put({x, y})) --t;
            in_a[x] = 1;
            insert_sorted(st.a_zero, x);
        }
    }

    const int r1 = static_cast<int>(st.b_star.size());
    auto in_degree_rest = [&](Vertex c) {
        long long d = 0;
        for (Vertex z = 0; z < n; ++z)
            if (rest(z) && board.has_arc(z, c)) ++d;
        return d;
    };
    while (t > 0) {
        const long long m = big();
        const Vertex top = st.b_star[r1 - 1];
        std::optional<Arc> pick;
        if (in_degree_rest(top) < m) {
            for (Vertex z = 0; z < n && !pick; ++z) {
                if (!rest(z)) continue;
                bool hit = false;
                for (Vertex y = 0; y < n && !hit; ++y) hit = in_b[y] && board.has_arc(z, y);
                if (!hit) pick = Arc{z, top};
            }
        } else {
            int ell = 0;
            for (int i = r1 - 1; i >= 1; --i)
                if (in_degree_rest(st.b_star[i - 1]) < m) {
                    ell = i;
                    break;
                }
            if (ell > 0) {
                const Vertex c = st.b_star[ell - 1], next = st.b_star[ell];
                for (Vertex z = 0; z < n && !pick; ++z)
                    if (rest(z) && board.is_undirected(z, c) && board.has_arc(z, next)) pick = Arc{z, c};
            }
        }
        if (!pick) throw ArenaError(ErrorKind::StructureExhausted, "no star slot left for the riskless top-up");
        if (out.put(*pick)) --t;
    }
    reply.arcs = std::move(out.arcs());
    return reply;
}

namespace {

std::vector<Vertex> a_chain(const ProtectedState& s)
{
    std::vector<Vertex> c = s.a_almost;
    c.insert(c.end(), s.a_star.begin(), s.a_star.end());
    return c;
}

std::vector<Vertex> slice(const std::vector<Vertex>& v, int from, int to)  // 1-based, inclusive
{
    if (to < from) return {};
    return {v.begin() + (from - 1), v.begin() + to};
}

}  // namespace

ProtectedReply base_two(OrientationBoard& board, const ProtectedState& s, Arc e)
{
    const int n = board.n();
    const Vertex v = e.tail, w = e.head;
    const auto in_a = membership(n, {&s.a_dead, &s.a_almost, &s.a_star, &s.a_zero});
    const auto in_b = membership(n, {&s.b_dead, &s.b_almost, &s.b_star, &s.b_zero});
    const auto in_a0 = membership(n, {&s.a_zero});
    if (in_b[v] || in_b[w]) throw ArenaError(ErrorKind::InvalidArgument, "maker arc touches B");
    if (contains(s.a_dead, v)) throw ArenaError(ErrorKind::InvariantBreach, "maker arc leaves a dead vertex");
    auto rest = [&](Vertex z) { return !in_a[z] && !in_b[z]; };
    auto had = [&](Vertex x, Vertex y) { return board.has_arc(x, y) && !(x == v && y == w); };

    const auto chain = a_chain(s);
    const int k1 = static_cast<int>(s.a_almost.size());
    const int k2 = static_cast<int>(s.a_star.size());
    const int kk = k1 + k2;
    Emitter out(board);
    ProtectedReply reply;
    reply.prot = s;
    ProtectedState& p = reply.prot;

    auto pos = std::find(chain.begin(), chain.end(), v);
    if (pos != chain.end()) {
        const int ell = static_cast<int>(pos - chain.begin()) + 1;
        auto C = [&](int i) { return chain[i - 1]; };
        std::vector<Arc> f1, f2, f3;
        for (int i = 1; i < ell; ++i) f1.push_back({C(i), w});
        for (Vertex z : s.a_zero) f2.push_back({C(1), z});
        if (k2 > 0)
            for (Vertex z = 0; z < n; ++z)
                if (rest(z)) f3.push_back({C(k1 + 1), z});
        out.family(std::move(f1));
        out.family(std::move(f2));
        out.family(std::move(f3));

        p.a_dead.push_back(C(1));
        p.a_almost = k2 > 0 ? slice(chain, 2, k1 + 1) : slice(chain, 2, k1);
        p.a_star = slice(chain, k1 + 2, kk);
        reply.arcs = std::move(out.arcs());
        return reply;
    }

    const bool from_zero = in_a0[v] != 0;
    int ell = kk + 1;
    for (int i = 1; i <= kk; ++i)
        if (!had(chain[i - 1], v)) {
            ell = i;
            break;
        }
    std::vector<Vertex> vp = chain;
    vp.insert(vp.begin() + (ell - 1), v);
    auto V = [&](int i) { return vp[i - 1]; };
    const bool has_next = ell <= kk;

    std::vector<std::vector<Arc>> fam(5);
    for (int i = 1; i < ell; ++i) fam[0].push_back({V(i), w});
    for (int i = ell + 1; i <= kk + 1; ++i) fam[1].push_back({V(ell), V(i)});
    if (has_next)
        for (Vertex z = 0; z < n; ++z)
            if ((rest(z) || in_a0[z]) && had(V(ell + 1), z)) fam[2].push_back({V(ell), z});
    if (from_zero) {
        for (Vertex z : s.a_zero)
            if (!has_next || !had(V(ell + 1), z)) fam[3].push_back({V(1), z});
    } else {
        for (Vertex y = 0; y < n; ++y)
            if (in_b[y]) fam[3].push_back({V(ell), y});
    }
    for (Vertex z = 0; z < n; ++z)
        if (rest(z) && z != v && (!has_next || !had(V(ell + 1), z))) fam[4].push_back({V(k1 + 1), z});
    for (auto& f : fam) out.family(std::move(f));

    if (from_zero) {
        p.a_dead.push_back(V(1));
        p.a_almost = slice(vp, 2, k1 + 1);
        erase_value(p.a_zero, v);
    } else {
        p.a_almost = slice(vp, 1, k1 + 1);
    }
    p.a_star = slice(vp, k1 + 2, kk + 1);
    reply.arcs = std::move(out.arcs());
    return reply;
}

namespace {

// One pass of the promotion ladder on the A side. Returns the arc to direct, or
// nullopt once A consists of dead vertices only. Only pair availability is
// queried, so the same board serves the dual state.
std::optional<Arc> ladder_a(const OrientationBoard& board, ProtectedState& p)
{
    const int n = board.n();
    for (;;) {
        const auto in_a = membership(n, {&p.a_dead, &p.a_almost, &p.a_star, &p.a_zero});
        const auto in_b = membership(n, {&p.b_dead, &p.b_almost, &p.b_star, &p.b_zero});
        auto rest = [&](Vertex z) { return !in_a[z] && !in_b[z]; };

        if (!p.a_almost.empty()) {
            const Vertex top = p.a_almost.front();
            for (Vertex y : p.a_zero)
                if (board.is_undirected(top, y)) return Arc{top, y};
            p.a_dead.push_back(top);
            p.a_almost.erase(p.a_almost.begin());
            continue;
        }
        if (!p.a_star.empty()) {
            const Vertex top = p.a_star.front();
            for (Vertex y = 0; y < n; ++y)
                if (rest(y) && board.is_undirected(top, y)) return Arc{top, y};
            p.a_almost.push_back(top);
            p.a_star.erase(p.a_star.begin());
            continue;
        }
        std::optional<Vertex> fresh;
        for (Vertex y = 0; y < n && !fresh; ++y)
            if (rest(y)) fresh = y;
        if (!p.a_zero.empty() && fresh) {
            const Vertex x = p.a_zero.front();
            p.a_zero.erase(p.a_zero.begin());
            p.a_star.push_back(x);
            return Arc{x, *fresh};
        }
        if (p.a_zero.size() >= 2) {
            const Vertex x = p.a_zero[0], y = p.a_zero[1];
            p.a_zero.erase(p.a_zero.begin());
            p.a_almost.push_back(x);
            return Arc{x, y};
        }
        if (p.a_zero.size() == 1) {
            p.a_dead.push_back(p.a_zero.front());
            p.a_zero.clear();
            continue;
        }
        return std::nullopt;
    }
}

}  // namespace

ProtectedReply add_edge_two(OrientationBoard& board, const ProtectedState& s)
{
    if (board.is_full()) throw ArenaError(ErrorKind::NoMove, "board is full");
    ProtectedReply reply;
    reply.prot = s;
    Emitter out(board);

    if (auto f = ladder_a(board, reply.prot)) {
        out.put(*f);
        reply.arcs = std::move(out.arcs());
        return reply;
    }
    ProtectedState dual = dual_state(reply.prot);
    if (auto f = ladder_a(board, dual)) {
        reply.prot = dual_state(dual);
        out.put(f->reversed());
        reply.arcs = std::move(out.arcs());
        return reply;
    }
    reply.prot = dual_state(dual);

    const int n = board.n();
    ProtectedState& p = reply.prot;
    const auto in_ab = membership(n, {&p.a_dead, &p.b_dead});
    for (Vertex x = 0; x < n; ++x) {
        if (in_ab[x]) continue;
        for (Vertex y = x + 1; y < n; ++y)
            if (!in_ab[y] && board.is_undirected(x, y)) {
                p.a_star.push_back(x);
                out.put({x, y});
                reply.arcs = std::move(out.arcs());
                return reply;
            }
    }
    throw ArenaError(ErrorKind::InvariantBreach, "undirected pair outside the rest while A and B are dead");
}

Violations check_strict_invariants(const StrictState& state, const OrientationBoard& board, int b)
{
    if (state.stage == StrictStage::II) return verify_protected(board, state.prot);
    Violations out = verify_riskless(board, state.riskless, state.rank());
    if (b > 0) {
        const long long want = static_cast<long long>(state.rank()) * (b + 1);
        if (board.arc_count() != want)
            out.push_back({"ledger", std::to_string(board.arc_count()) + " arcs after rank " +
                                         std::to_string(state.rank()) + ", expected " + std::to_string(want)});
    }
    return out;
}

namespace {

// Runs one reply in the primal orientation: the maker arc lies inside V \ B.
std::vector<Arc> primal_reply(StrictState& st, OrientationBoard& board, Arc e, int b)
{
    const int n = board.n();
    std::vector<Arc> arcs;
    auto append = [&](std::vector<Arc>& more) { arcs.insert(arcs.end(), more.begin(), more.end()); };

    if (st.stage == StrictStage::I) {
        auto base = base_one(board, st.riskless, e);
        if (static_cast<int>(base.arcs.size()) > b)
            throw ArenaError(ErrorKind::InvariantBreach,
                             "base step needs " + std::to_string(base.arcs.size()) + " arcs, bias is " +
                                 std::to_string(b));
        append(base.arcs);
        auto top = add_edges_one(board, base.riskless, b);
        append(top.arcs);
        st.riskless = std::move(top.riskless);
        if (st.rank() == n / 25) {
            st.prot = transition(board, st.riskless);
            st.stage = StrictStage::II;
        }
        return arcs;
    }

    auto base = base_two(board, st.prot, e);
    if (static_cast<int>(base.arcs.size()) > b)
        throw ArenaError(ErrorKind::InvariantBreach,
                         "base step needs " + std::to_string(base.arcs.size()) + " arcs, bias is " +
                             std::to_string(b));
    append(base.arcs);
    st.prot = std::move(base.prot);
    while (static_cast<int>(arcs.size()) < b && !board.is_full()) {
        auto one = add_edge_two(board, st.prot);
        append(one.arcs);
        st.prot = std::move(one.prot);
    }
    return arcs;
}

bool touches_b(const StrictState& st, Arc e)
{
    auto hit = [&](const std::vector<Vertex>& s) { return contains(s, e.tail) || contains(s, e.head); };
    if (st.stage == StrictStage::I) return hit(st.riskless.b_star) || hit(st.riskless.b_zero);
    return hit(st.prot.b_dead) || hit(st.prot.b_almost) || hit(st.prot.b_star) || hit(st.prot.b_zero);
}

}  // namespace

StrictReply respond_strict(const StrictState& state, const OrientationBoard& board, Arc maker_arc, int b,
                           bool verify)
{
    if (!board.has_arc(maker_arc)) throw ArenaError(ErrorKind::InvalidArgument, "maker arc is not on the board");
    StrictReply reply;
    reply.state = state;
    StrictState& st = reply.state;
    const int n = board.n();

    // A first stage of zero rounds hands over the empty certificate at once.
    if (st.stage == StrictStage::I && st.rank() == n / 25) {
        st.prot = transition(new_board(n), st.riskless);
        st.stage = StrictStage::II;
    }

    const bool flip = touches_b(st, maker_arc);
    OrientationBoard scratch = flip ? reverse_board(board) : board;
    StrictState primal = flip ? dual_state(st) : st;
    auto arcs = primal_reply(primal, scratch, flip ? maker_arc.reversed() : maker_arc, b);

    st = flip ? dual_state(primal) : primal;
    st.round += 1;
    reply.arcs.reserve(arcs.size());
    for (Arc a : arcs) reply.arcs.push_back(flip ? a.reversed() : a);

    if (verify) {
        OrientationBoard after = board;
        for (Arc a : reply.arcs) after.direct(a);
        auto v = check_strict_invariants(st, after, st.stage == StrictStage::I ? b : 0);
        if (!v.empty()) throw ArenaError(ErrorKind::InvariantBreach, v.front().property + ": " + v.front().detail);
    }
    return reply;
}

}  // namespace arena
