#include "arena/sweep.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace arena {

namespace {

long long to_int(std::string_view s, std::string_view what)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ArenaError(ErrorKind::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

long long ceil_div(long long a, long long b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

int BiasFormula::eval(int n) const
{
    return static_cast<int>(ceil_div(p * n, q) + c);
}

BiasFormula parse_bias_formula(std::string_view s)
{
    BiasFormula f;
    auto slash = s.find('/');
    if (slash == std::string_view::npos) throw ArenaError(ErrorKind::InvalidArgument, "bias formula needs p/q");
    f.p = to_int(s.substr(0, slash), "numerator");
    auto tail = s.substr(slash + 1);
    auto sign = tail.find_first_of("+-");
    f.q = to_int(tail.substr(0, sign), "denominator");
    if (sign != std::string_view::npos) {
        f.c = to_int(tail.substr(sign + 1), "offset");
        if (tail[sign] == '-') f.c = -f.c;
    }
    if (f.q <= 0 || f.p < 0) throw ArenaError(ErrorKind::InvalidArgument, "bias formula needs p >= 0 and q > 0");
    return f;
}

std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    if (auto dots = s.find(".."); dots != std::string_view::npos) {
        auto rest = s.substr(dots + 2);
        long long step = 1;
        if (auto colon = rest.find(':'); colon != std::string_view::npos) {
            step = to_int(rest.substr(colon + 1), "step");
            rest = rest.substr(0, colon);
        }
        long long lo = to_int(s.substr(0, dots), "range start"), hi = to_int(rest, "range end");
        if (step <= 0) throw ArenaError(ErrorKind::InvalidArgument, "range step must be positive");
        for (long long v = lo; v <= hi; v += step) out.push_back(static_cast<int>(v));
        return out;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(static_cast<int>(to_int(item, "integer")));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

SweepRow summarize(const Transcript& t, int violations)
{
    SweepRow row;
    row.config = t.config;
    row.winner = t.winner;
    row.terminal = t.terminal;
    row.rounds = static_cast<int>(t.rounds.size());
    for (const auto& r : t.rounds) row.max_reply = std::max(row.max_reply, static_cast<int>(r.breaker.size()));
    row.violations = violations;
    row.diagnostic = t.diagnostic;
    return row;
}

namespace {

SweepRow run_one(const GameConfig& c, bool referee)
{
    try {
        auto t = play(c);
        int v = referee ? static_cast<int>(referee_check(t).size()) : 0;
        return summarize(t, v);
    } catch (const std::exception& e) {
        SweepRow row;
        row.config = c;
        row.diagnostic = e.what();
        row.violations = 1;
        return row;
    }
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const std::vector<GameConfig>& configs, bool referee)
{
    std::vector<SweepRow> rows;
    rows.reserve(configs.size());
    for (const auto& c : configs) rows.push_back(run_one(c, referee));
    return rows;
}

int default_threads()
{
    if (const char* env = std::getenv("ARENA_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return omp_get_max_threads();
}

std::vector<SweepRow> run_sweep(const std::vector<GameConfig>& configs, int threads, bool referee)
{
    const int team = threads > 0 ? threads : default_threads();
    std::vector<SweepRow> rows(configs.size());
    const long long count = static_cast<long long>(configs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (long long i = 0; i < count; ++i) rows[i] = run_one(configs[i], referee);
    return rows;
}

std::string csv_header()
{
    return "n,b,rules,obreaker,omaker,seed,winner,max_reply,rounds";
}

std::string csv_row(const SweepRow& r)
{
    std::ostringstream os;
    os << r.config.n << ',' << r.config.b << ',' << to_string(r.config.rules) << ',' << r.config.obreaker << ','
       << r.config.omaker << ',' << r.config.seed << ',' << (r.winner ? to_string(*r.winner) : "none") << ','
       << r.max_reply << ',' << r.rounds;
    return os.str();
}

}  // namespace arena
