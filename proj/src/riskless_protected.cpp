#include "arena/riskless_protected.hpp"

#include <algorithm>

namespace arena {

namespace {

enum Role : char { kRest = 0, kA0, kAStar, kAAlmost, kADead, kB0, kBStar, kBAlmost, kBDead };

bool in_a(char r) { return r >= kA0 && r <= kADead; }
bool in_b(char r) { return r >= kB0; }

std::string vs(Vertex v) { return std::to_string(v); }

// Assigns each vertex its class; reports duplicates and out-of-range ids.
std::vector<char> assign_roles(int n, std::initializer_list<std::pair<const std::vector<Vertex>*, Role>> parts,
                               Violations& out)
{
    std::vector<char> role(n, kRest);
    std::vector<char> seen(n, 0);
    for (auto [list, r] : parts) {
        for (Vertex v : *list) {
            if (v < 0 || v >= n) {
                out.push_back({"partition", "vertex " + vs(v) + " out of range"});
                continue;
            }
            if (seen[v]) out.push_back({"partition", "vertex " + vs(v) + " listed twice"});
            seen[v] = 1;
            role[v] = r;
        }
    }
    return role;
}

void check_udb(const OrientationBoard& board, const std::vector<char>& role, const std::string& name,
               Violations& out)
{
    const int n = board.n();
    for (Vertex x = 0; x < n; ++x) {
        if (!in_a(role[x])) continue;
        for (Vertex y = 0; y < n; ++y)
            if (in_b(role[y]) && !board.has_arc(x, y)) {
                out.push_back({name, "missing arc " + to_string(Arc{x, y})});
                return;
            }
    }
}

void check_chain(const OrientationBoard& board, const std::vector<Vertex>& seq, const std::string& name,
                 Violations& out)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (!board.has_arc(seq[i], seq[j])) {
                out.push_back({name, "missing arc " + to_string(Arc{seq[i], seq[j]})});
                return;
            }
}

// For every z selected by `pick`, the indices i with (v_i, z) must be a prefix.
template <class Pick>
void check_down_sets(const OrientationBoard& board, const std::vector<Vertex>& seq, Pick pick,
                     const std::string& name, Violations& out)
{
    for (Vertex z = 0; z < board.n(); ++z) {
        if (!pick(z)) continue;
        bool gap = false;
        for (Vertex v : seq) {
            bool has = board.has_arc(v, z);
            if (has && gap) {
                out.push_back({name, "indices into " + vs(z) + " are not a down set"});
                return;
            }
            if (!has) gap = true;
        }
    }
}

// For every z selected by `pick`, the indices i with (z, w_i) must be a suffix.
template <class Pick>
void check_up_sets(const OrientationBoard& board, const std::vector<Vertex>& seq, Pick pick,
                   const std::string& name, Violations& out)
{
    for (Vertex z = 0; z < board.n(); ++z) {
        if (!pick(z)) continue;
        bool started = false;
        for (Vertex w : seq) {
            bool has = board.has_arc(z, w);
            if (!has && started) {
                out.push_back({name, "indices from " + vs(z) + " are not an upset"});
                return;
            }
            if (has) started = true;
        }
    }
}

int count_out(const OrientationBoard& board, Vertex v, const std::vector<char>& role, char r)
{
    int c = 0;
    for (Vertex z = 0; z < board.n(); ++z)
        if (role[z] == r && board.has_arc(v, z)) ++c;
    return c;
}

int count_in(const OrientationBoard& board, Vertex w, const std::vector<char>& role, char r)
{
    int c = 0;
    for (Vertex z = 0; z < board.n(); ++z)
        if (role[z] == r && board.has_arc(z, w)) ++c;
    return c;
}

template <class T>
std::vector<T> reversed(std::vector<T> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

template <class T>
std::vector<T> concat(const std::vector<T>& a, const std::vector<T>& b)
{
    std::vector<T> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

Violations verify_riskless(const OrientationBoard& board, const RisklessState& s, int rank)
{
    Violations out;
    const int n = board.n();
    auto role = assign_roles(n, {{&s.a_star, kAStar}, {&s.a_zero, kA0}, {&s.b_star, kBStar}, {&s.b_zero, kB0}}, out);
    if (!out.empty()) return out;

    const int size_a = static_cast<int>(s.a_star.size() + s.a_zero.size());
    const int size_b = static_cast<int>(s.b_star.size() + s.b_zero.size());
    const int big = std::max(size_a, size_b);

    check_udb(board, role, "UDB", out);

    if (std::abs(size_a - size_b) > 1)
        out.push_back({"R1", "|A| = " + std::to_string(size_a) + ", |B| = " + std::to_string(size_b)});
    if (static_cast<int>(s.a_star.size()) != rank || static_cast<int>(s.b_star.size()) != rank)
        out.push_back({"R1", "star sizes " + std::to_string(s.a_star.size()) + "/" + std::to_string(s.b_star.size()) +
                                 " for rank " + std::to_string(rank)});

    check_chain(board, s.a_star, "R2.1", out);
    check_chain(board, s.b_star, "R2.1", out);
    check_down_sets(board, s.a_star, [&](Vertex z) { return role[z] == kA0 || role[z] == kRest; }, "R2.2", out);
    check_up_sets(board, s.b_star, [&](Vertex z) { return role[z] == kB0 || role[z] == kRest; }, "R2.3", out);

    const int r = static_cast<int>(s.a_star.size());
    for (int i = 1; i <= r; ++i) {
        Vertex v = s.a_star[i - 1];
        if (count_out(board, v, role, kA0) > r + 1 - i)
            out.push_back({"R3.1", "v_" + std::to_string(i) + " = " + vs(v) + " has too many arcs into A_0"});
        if (count_out(board, v, role, kRest) > big)
            out.push_back({"R3.1", "v_" + std::to_string(i) + " = " + vs(v) + " has too many arcs to the rest"});
    }
    const int rb = static_cast<int>(s.b_star.size());
    for (int i = 1; i <= rb; ++i) {
        Vertex w = s.b_star[i - 1];
        if (count_in(board, w, role, kB0) > i)
            out.push_back({"R3.2", "w_" + std::to_string(i) + " = " + vs(w) + " has too many arcs from B_0"});
        if (count_in(board, w, role, kRest) > big)
            out.push_back({"R3.2", "w_" + std::to_string(i) + " = " + vs(w) + " has too many arcs from the rest"});
    }

    for (Arc a : board.arcs()) {
        char t = role[a.tail], h = role[a.head];
        bool ok = (in_a(t) && in_b(h)) || (t == kAStar && !in_b(h)) || (!in_a(t) && h == kBStar);
        if (!ok) {
            out.push_back({"R4", "arc " + to_string(a) + " outside the allowed edge set"});
            break;
        }
    }
    return out;
}

Violations verify_protected(const OrientationBoard& board, const ProtectedState& s)
{
    Violations out;
    const int n = board.n();
    auto role = assign_roles(n,
                             {{&s.a_dead, kADead},
                              {&s.a_almost, kAAlmost},
                              {&s.a_star, kAStar},
                              {&s.a_zero, kA0},
                              {&s.b_dead, kBDead},
                              {&s.b_almost, kBAlmost},
                              {&s.b_star, kBStar},
                              {&s.b_zero, kB0}},
                             out);
    if (!out.empty()) return out;

    check_udb(board, role, "UDB", out);

    auto sz = [](const std::vector<Vertex>& v) { return static_cast<long long>(v.size()); };
    const long long size_a = sz(s.a_dead) + sz(s.a_almost) + sz(s.a_star) + sz(s.a_zero);
    const long long size_b = sz(s.b_dead) + sz(s.b_almost) + sz(s.b_star) + sz(s.b_zero);
    if (10 * size_a < n + 10) out.push_back({"P1", "|A| = " + std::to_string(size_a) + " below n/10 + 1"});
    if (10 * size_b < n + 10) out.push_back({"P1", "|B| = " + std::to_string(size_b) + " below n/10 + 1"});
    if (10 * (sz(s.a_dead) + sz(s.a_zero)) < n) out.push_back({"P1", "|A_D u A_0| below n/10"});
    if (10 * (sz(s.b_dead) + sz(s.b_zero)) < n) out.push_back({"P1", "|B_D u B_0| below n/10"});

    // Every x in `from` must beat every y selected by `target`.
    auto dominates = [&](const std::vector<Vertex>& from, auto target, bool outward, const std::string& prop,
                         const std::string& label) {
        for (Vertex x : from)
            for (Vertex y = 0; y < n; ++y) {
                if (!target(y)) continue;
                bool ok = outward ? board.has_arc(x, y) : board.has_arc(y, x);
                if (!ok) {
                    out.push_back({prop, label + " " + vs(x) + " misses pair with " + vs(y)});
                    return;
                }
            }
    };
    dominates(s.a_dead, [&](Vertex y) { return role[y] != kADead; }, true, "P2", "dead");
    dominates(s.b_dead, [&](Vertex y) { return role[y] != kBDead; }, false, "P2", "dead");
    if (!is_transitive_tournament(board, std::span<const Vertex>(s.a_dead)))
        out.push_back({"P2", "A_D is not a transitive tournament"});
    if (!is_transitive_tournament(board, std::span<const Vertex>(s.b_dead)))
        out.push_back({"P2", "B_D is not a transitive tournament"});
    dominates(s.a_almost, [&](Vertex y) { return !in_a(role[y]); }, true, "P3", "almost dead");
    dominates(s.b_almost, [&](Vertex y) { return !in_b(role[y]); }, false, "P3", "almost dead");

    const long long k2 = sz(s.a_star), l2 = sz(s.b_star);
    if (25 * k2 > n) out.push_back({"P4", "k2 = " + std::to_string(k2) + " exceeds n/25"});
    if (25 * l2 > n) out.push_back({"P4", "l2 = " + std::to_string(l2) + " exceeds n/25"});

    const auto vseq = concat(s.a_almost, s.a_star);
    const auto wseq = concat(s.b_star, s.b_almost);
    check_chain(board, vseq, "P4.1", out);
    check_chain(board, wseq, "P4.1", out);
    check_down_sets(board, vseq, [&](Vertex z) { return role[z] == kA0 || role[z] == kRest; }, "P4.2", out);
    check_up_sets(board, wseq, [&](Vertex z) { return role[z] == kB0 || role[z] == kRest; }, "P4.3", out);

    for (long long i = 1; i <= k2; ++i) {
        Vertex v = s.a_star[i - 1];
        long long e = count_out(board, v, role, kA0);
        if (25 * e > n + 25 * (1 - i))
            out.push_back({"P5.1", "v_{k1+" + std::to_string(i) + "} = " + vs(v) + " has " + std::to_string(e) +
                                       " arcs into A_0"});
    }
    for (long long i = 1; i <= l2; ++i) {
        Vertex w = s.b_star[i - 1];
        long long e = count_in(board, w, role, kB0);
        if (25 * e > n - 25 * l2 + 25 * i)
            out.push_back({"P5.2", "w_" + std::to_string(i) + " = " + vs(w) + " has " + std::to_string(e) +
                                       " arcs from B_0"});
    }

    for (Arc a : board.arcs()) {
        char t = role[a.tail], h = role[a.head];
        bool ok = (in_a(t) && in_b(h)) || (in_a(t) && t != kA0 && !in_b(h)) || (!in_a(t) && in_b(h) && h != kB0);
        if (!ok) {
            out.push_back({"P6", "arc " + to_string(a) + " outside the allowed edge set"});
            break;
        }
    }
    return out;
}

SizeBounds size_bounds(const OrientationBoard& board, const RisklessState& s)
{
    SizeBounds sb;
    const int n = board.n();
    Violations ignore;
    auto role = assign_roles(n, {{&s.a_star, kAStar}, {&s.a_zero, kA0}, {&s.b_star, kBStar}, {&s.b_zero, kB0}}, ignore);
    sb.size_a = static_cast<int>(s.a_star.size() + s.a_zero.size());
    sb.size_b = static_cast<int>(s.b_star.size() + s.b_zero.size());
    for (Vertex z = 0; z < n; ++z) {
        if (role[z] != kRest) continue;
        bool from_a = false, into_b = false;
        for (Vertex x = 0; x < n; ++x) {
            if (in_a(role[x]) && board.has_arc(x, z)) from_a = true;
            if (in_b(role[x]) && board.has_arc(z, x)) into_b = true;
        }
        if (!from_a) ++sb.size_xa;
        if (!into_b) ++sb.size_yb;
    }
    sb.ok = 5 * sb.size_a < n + 5 && 5 * sb.size_b < n + 5 && 5 * sb.size_xa > 2 * n - 10 &&
            5 * sb.size_yb > 2 * n - 10;
    return sb;
}

ProtectedState transition(const OrientationBoard& board, const RisklessState& state)
{
    ProtectedState p;
    p.a_star = state.a_star;
    p.a_zero = state.a_zero;
    p.b_star = state.b_star;
    p.b_zero = state.b_zero;
    auto v = verify_protected(board, p);
    if (!v.empty())
        throw ArenaError(ErrorKind::TransitionFailed, v.front().property + ": " + v.front().detail);
    return p;
}

RisklessState dual_state(const RisklessState& s)
{
    return {reversed(s.b_star), s.b_zero, reversed(s.a_star), s.a_zero};
}

ProtectedState dual_state(const ProtectedState& s)
{
    ProtectedState d;
    d.a_dead = s.b_dead;
    d.a_almost = reversed(s.b_almost);
    d.a_star = reversed(s.b_star);
    d.a_zero = s.b_zero;
    d.b_dead = s.a_dead;
    d.b_star = reversed(s.a_star);
    d.b_almost = reversed(s.a_almost);
    d.b_zero = s.a_zero;
    return d;
}

bool protected_is_acyclic(const OrientationBoard& board, const ProtectedState&)
{
    return !has_cycle(board);
}

bool transition_size_forced(int n)
{
    if (n < 60) return false;
    const long long r = n / 25;
    const long long b = (19LL * n + 19) / 20;
    const long long edges = r * (b + 1);
    // Smallest m = a0 + 1 compatible with the edge count.
    long long m = 0;
    while ((r + m) * (r + m) + 4 * r * r + 2 * r * m < edges) ++m;
    return 10 * m >= n + 30;
}

int minimal_transition_n()
{
    int n = 60;
    while (!transition_size_forced(n)) ++n;
    return n;
}

}  // namespace arena
