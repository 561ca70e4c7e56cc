#include "arena/engine.hpp"

#include <algorithm>

namespace arena {

void validate_config(const GameConfig& c)
{
    auto fail = [](const std::string& why) { throw ArenaError(ErrorKind::InvalidConfig, why); };
    if (c.n < 1) fail("n must be at least 1");
    if (c.b < 1) fail("b must be at least 1");
    const auto& bn = breaker_names();
    if (std::find(bn.begin(), bn.end(), c.obreaker) == bn.end()) fail("unknown obreaker strategy '" + c.obreaker + "'");
    const auto& mn = maker_names();
    if (c.omaker != "human" && std::find(mn.begin(), mn.end(), c.omaker) == mn.end())
        fail("unknown omaker strategy '" + c.omaker + "'");
    if (c.obreaker == "alpha-monotone" && c.rules != Rules::Monotone) fail("alpha-monotone needs monotone rules");
    if (c.obreaker == "riskless-strict") {
        if (c.rules != Rules::Strict) fail("riskless-strict needs strict rules");
        if (20LL * c.b < 19LL * c.n || c.b > c.n - 3) fail("riskless-strict needs 19n/20 <= b <= n-3");
    }
    if (c.obreaker == "trivial" && c.b < c.n - 2) fail("trivial needs b >= n-2");
}

std::string default_obreaker(const GameConfig& c)
{
    for (const char* name : {"alpha-monotone", "riskless-strict", "trivial"}) {
        GameConfig probe = c;
        probe.obreaker = name;
        try {
            validate_config(probe);
            return name;
        } catch (const ArenaError&) {
        }
    }
    return "naive";
}

json config_to_json(const GameConfig& c)
{
    return {{"n", c.n},
            {"b", c.b},
            {"rules", to_string(c.rules)},
            {"obreaker", c.obreaker},
            {"omaker", c.omaker},
            {"seed", c.seed},
            {"check_certificates", c.check_certificates}};
}

GameConfig config_from_json(const json& j)
{
    try {
        GameConfig c;
        c.n = j.at("n").get<int>();
        c.b = j.at("b").get<int>();
        c.rules = parse_rules(j.at("rules").get<std::string>());
        c.obreaker = j.value("obreaker", c.obreaker);
        c.omaker = j.value("omaker", c.omaker);
        c.seed = j.value("seed", std::uint64_t{0});
        c.check_certificates = j.value("check_certificates", false);
        return c;
    } catch (const json::exception& e) {
        throw ArenaError(ErrorKind::InvalidConfig, e.what());
    }
}

std::string_view to_string(Terminal t)
{
    switch (t) {
    case Terminal::CycleClosed: return "CycleClosed";
    case Terminal::TransitiveTournament: return "TransitiveTournament";
    case Terminal::Forfeit: return "Forfeit";
    }
    return "?";
}

Terminal parse_terminal(std::string_view s)
{
    if (s == "CycleClosed") return Terminal::CycleClosed;
    if (s == "TransitiveTournament") return Terminal::TransitiveTournament;
    if (s == "Forfeit") return Terminal::Forfeit;
    throw ArenaError(ErrorKind::InvalidArgument, "unknown terminal '" + std::string(s) + "'");
}

Player parse_player(std::string_view s)
{
    if (s == "OMaker") return Player::OMaker;
    if (s == "OBreaker") return Player::OBreaker;
    throw ArenaError(ErrorKind::InvalidArgument, "unknown player '" + std::string(s) + "'");
}

json transcript_to_json(const Transcript& t)
{
    json rounds = json::array();
    for (const auto& r : t.rounds)
        rounds.push_back({{"maker", arc_to_json(r.maker)}, {"breaker", arcs_to_json(r.breaker)}, {"hash", hash_hex(r.hash)}});
    json j = {{"config", config_to_json(t.config)}, {"rounds", std::move(rounds)}};
    j["winner"] = t.winner ? json(to_string(*t.winner)) : json(nullptr);
    j["terminal"] = t.terminal ? json(to_string(*t.terminal)) : json(nullptr);
    j["final"] = board_to_json(t.final_board);
    j["diagnostic"] = t.diagnostic;
    return j;
}

Transcript transcript_from_json(const json& j)
{
    try {
        Transcript t;
        t.config = config_from_json(j.at("config"));
        for (const auto& r : j.at("rounds")) {
            Round round;
            round.maker = arc_from_json(r.at("maker"));
            round.breaker = arcs_from_json(r.at("breaker"));
            round.hash = std::stoull(r.at("hash").get<std::string>(), nullptr, 16);
            t.rounds.push_back(std::move(round));
        }
        if (j.contains("winner") && !j["winner"].is_null()) t.winner = parse_player(j["winner"].get<std::string>());
        if (j.contains("terminal") && !j["terminal"].is_null())
            t.terminal = parse_terminal(j["terminal"].get<std::string>());
        t.final_board = board_from_json(j.at("final"));
        t.diagnostic = j.value("diagnostic", "");
        return t;
    } catch (const json::exception& e) {
        throw ArenaError(ErrorKind::InvalidArgument, std::string("malformed transcript: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ArenaError(ErrorKind::InvalidArgument, std::string("malformed transcript: ") + e.what());
    }
}

std::optional<Violation> judge_reply(const OrientationBoard& board, const std::vector<Arc>& reply, int b, Rules rules)
{
    OrientationBoard scratch = board;
    for (Arc a : reply) {
        if (a.tail < 0 || a.head < 0 || a.tail >= board.n() || a.head >= board.n() || !scratch.is_available(a))
            return Violation{"Availability", "breaker arc " + to_string(a) + " is not available"};
        scratch.direct(a);
    }
    const long long size = static_cast<long long>(reply.size());
    if (rules == Rules::Monotone) {
        if (size < 1 || size > b)
            return Violation{"MonotoneBias", "reply of " + std::to_string(size) + " arcs with b = " + std::to_string(b)};
    } else {
        const long long want = std::min<long long>(b, board.undirected_count());
        if (size != want)
            return Violation{"StrictBias",
                             "reply of " + std::to_string(size) + " arcs, expected " + std::to_string(want)};
    }
    return std::nullopt;
}

Match::Match(const GameConfig& config) : config_(config)
{
    validate_config(config_);
    board_ = new_board(config_.n);
    breaker_ = make_breaker(config_.obreaker, {config_.n, config_.b, config_.rules, false});
    if (board_.is_full()) finish(Player::OBreaker, Terminal::TransitiveTournament);
}

void Match::finish(Player winner, Terminal terminal, std::string why)
{
    winner_ = winner;
    terminal_ = terminal;
    diagnostic_ = std::move(why);
}

void Match::apply_maker(Arc a)
{
    if (!maker_to_move()) throw ArenaError(ErrorKind::NotAvailable, "it is not OMaker's turn");
    if (a.tail < 0 || a.head < 0 || a.tail >= board_.n() || a.head >= board_.n() || !board_.is_available(a))
        throw ArenaError(ErrorKind::NotAvailable, "arc " + to_string(a) + " is not available");
    board_.direct(a);
    rounds_.push_back({a, {}, board_hash(board_)});
    maker_turn_ = false;
    if (has_cycle(board_))
        finish(Player::OMaker, Terminal::CycleClosed);
    else if (board_.is_full())
        finish(Player::OBreaker, Terminal::TransitiveTournament);
}

void Match::maker_forfeit(const std::string& why)
{
    if (!finished()) finish(Player::OBreaker, Terminal::Forfeit, "OMaker: " + why);
}

void Match::breaker_reply()
{
    if (finished() || maker_turn_) throw ArenaError(ErrorKind::NoMove, "no maker arc to answer");
    Round& round = rounds_.back();
    std::vector<Arc> reply;
    try {
        reply = breaker_->respond(board_, round.maker);
    } catch (const std::exception& e) {
        finish(Player::OMaker, Terminal::Forfeit, std::string("OBreaker: ") + e.what());
        return;
    }
    if (auto v = judge_reply(board_, reply, config_.b, config_.rules)) {
        finish(Player::OMaker, Terminal::Forfeit, "referee: " + v->property + ": " + v->detail);
        return;
    }
    for (Arc a : reply) board_.direct(a);
    round.breaker = std::move(reply);
    round.hash = board_hash(board_);
    maker_turn_ = true;

    if (config_.check_certificates) {
        auto v = breaker_->check(board_);
        if (!v.empty()) {
            finish(Player::OMaker, Terminal::Forfeit, "certificate: " + v.front().property + ": " + v.front().detail);
            return;
        }
    }
    if (has_cycle(board_))
        finish(Player::OMaker, Terminal::CycleClosed);
    else if (board_.is_full())
        finish(Player::OBreaker, Terminal::TransitiveTournament);
}

Transcript Match::transcript() const
{
    return {config_, rounds_, winner_, terminal_, board_, diagnostic_};
}

Transcript play(const GameConfig& config, const RoundObserver& observer)
{
    Match match(config);
    auto maker = make_maker(config.omaker, config.seed);
    while (!match.finished()) {
        Arc a;
        try {
            a = maker->move(match.board());
            match.apply_maker(a);
        } catch (const std::exception& e) {
            match.maker_forfeit(e.what());
            break;
        }
        if (!match.finished()) match.breaker_reply();
        if (observer) observer(match.rounds().back(), match.board());
    }
    return match.transcript();
}

Violations referee_check(const Transcript& t, bool deep)
{
    Violations out;
    const GameConfig& c = t.config;
    try {
        validate_config(c);
    } catch (const ArenaError& e) {
        out.push_back({"Config", e.what()});
        return out;
    }
    OrientationBoard board = new_board(c.n);
    auto breaker = make_breaker(c.obreaker, {c.n, c.b, c.rules, false});
    bool replaying = true;
    bool game_over = board.is_full();
    const bool forfeit = t.terminal == Terminal::Forfeit;
    const int total = static_cast<int>(t.rounds.size());

    for (int i = 0; i < total; ++i) {
        const Round& r = t.rounds[i];
        const bool last = i + 1 == total;
        const std::string at = "round " + std::to_string(i + 1) + ": ";
        if (game_over) {
            out.push_back({"Alternation", at + "played after the game was decided"});
            break;
        }
        if (r.maker.tail < 0 || r.maker.head < 0 || r.maker.tail >= c.n || r.maker.head >= c.n ||
            !board.is_available(r.maker)) {
            out.push_back({"Availability", at + "maker arc " + to_string(r.maker) + " is not available"});
            break;
        }
        board.direct(r.maker);

        if (has_cycle(board) || board.is_full()) {
            game_over = true;
            if (!r.breaker.empty()) out.push_back({"Alternation", at + "OBreaker moved after the game was decided"});
        } else {
            const bool forfeit_round = last && forfeit;
            const bool pending = last && !t.terminal && r.breaker.empty();
            if (r.breaker.empty() && !forfeit_round && !pending)
                out.push_back({"Alternation", at + "OBreaker skipped its turn"});
            auto judged = judge_reply(board, r.breaker, c.b, c.rules);
            if (judged && !forfeit_round && !pending) out.push_back({judged->property, at + judged->detail});

            if (replaying && !pending) {
                std::optional<std::vector<Arc>> expected;
                try {
                    expected = breaker->respond(board, r.maker);
                } catch (const std::exception&) {
                }
                bool consistent;
                if (forfeit_round && r.breaker.empty())
                    consistent = !expected || judge_reply(board, *expected, c.b, c.rules).has_value();
                else
                    consistent = expected && *expected == r.breaker;
                if (!consistent) {
                    out.push_back({"Replay", at + "OBreaker reply does not match the strategy"});
                    replaying = false;
                }
            }
            if (!judged)
                for (Arc a : r.breaker) board.direct(a);
            if (has_cycle(board) || board.is_full()) game_over = true;
            if (deep && replaying && !r.breaker.empty() && !forfeit_round)
                for (const auto& v : breaker->check(board)) out.push_back({"Certificate", at + v.property + ": " + v.detail});
        }
        if (r.hash != board_hash(board)) out.push_back({"Hash", at + "board hash mismatch"});
    }

    if (!deep && replaying && !forfeit && !t.rounds.empty() && !t.rounds.back().breaker.empty())
        for (const auto& v : breaker->check(board)) out.push_back({"Certificate", "final: " + v.property + ": " + v.detail});

    std::optional<Player> winner;
    std::optional<Terminal> terminal;
    if (has_cycle(board)) {
        winner = Player::OMaker;
        terminal = Terminal::CycleClosed;
    } else if (board.is_full()) {
        winner = Player::OBreaker;
        terminal = Terminal::TransitiveTournament;
    }
    if (forfeit) {
        if (terminal) out.push_back({"Winner", "forfeit claimed on a decided board"});
        if (!t.winner) out.push_back({"Winner", "forfeit without a winner"});
    } else if (winner != t.winner || terminal != t.terminal) {
        out.push_back({"Winner", "claimed " + std::string(t.winner ? to_string(*t.winner) : "none") + "/" +
                                     std::string(t.terminal ? to_string(*t.terminal) : "none") + ", board says " +
                                     std::string(winner ? to_string(*winner) : "none") + "/" +
                                     std::string(terminal ? to_string(*terminal) : "none")});
    }
    if (!(t.final_board == board)) out.push_back({"Final", "final board differs from the replay"});
    return out;
}

}  // namespace arena
