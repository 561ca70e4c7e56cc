#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/board.hpp"
#include "arena/omaker.hpp"
#include "arena/serialize.hpp"
#include "arena/strategy.hpp"

namespace arena {

struct GameConfig {
    int n = 0;
    int b = 1;
    Rules rules = Rules::Monotone;
    std::string obreaker = "alpha-monotone";
    std::string omaker = "close-or-random";  // or "human"
    std::uint64_t seed = 0;
    bool check_certificates = false;  // validate the breaker certificate after every reply
};

// Throws ArenaError(InvalidConfig) naming the first problem.
void validate_config(const GameConfig& config);

// First of alpha-monotone, riskless-strict, trivial that `config` admits; naive otherwise.
std::string default_obreaker(const GameConfig& config);

json config_to_json(const GameConfig& config);
GameConfig config_from_json(const json& j);

enum class Terminal { CycleClosed, TransitiveTournament, Forfeit };

std::string_view to_string(Terminal t);
Terminal parse_terminal(std::string_view s);
Player parse_player(std::string_view s);

struct Round {
    Arc maker;
    std::vector<Arc> breaker;
    std::uint64_t hash = 0;  // board after the last half-move of the round
};

struct Transcript {
    GameConfig config;
    std::vector<Round> rounds;
    std::optional<Player> winner;
    std::optional<Terminal> terminal;
    OrientationBoard final_board;
    std::string diagnostic;  // why a forfeit happened
};

json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const json& j);

// Empty when the reply is legal on `board` (which holds the maker arc);
// otherwise the property name and detail, as the referee reports it.
std::optional<Violation> judge_reply(const OrientationBoard& board, const std::vector<Arc>& reply, int b,
                                     Rules rules);

// One game in progress. OMaker moves come from outside, so the same object
// drives simulated games and the interactive service.
class Match {
public:
    explicit Match(const GameConfig& config);

    const GameConfig& config() const { return config_; }
    const OrientationBoard& board() const { return board_; }
    bool finished() const { return terminal_.has_value(); }
    bool maker_to_move() const { return !finished() && maker_turn_; }
    std::optional<Player> winner() const { return winner_; }
    std::optional<Terminal> terminal() const { return terminal_; }
    const std::vector<Round>& rounds() const { return rounds_; }
    const std::string& diagnostic() const { return diagnostic_; }
    const BreakerStrategy& breaker() const { return *breaker_; }

    // Throws ArenaError(NotAvailable) without touching the game when the arc is
    // illegal or it is not OMaker's turn.
    void apply_maker(Arc a);

    // Runs OBreaker's reply to the pending maker arc.
    void breaker_reply();

    // OMaker gives up (strategy failure in simulations).
    void maker_forfeit(const std::string& why);

    Transcript transcript() const;

private:
    void finish(Player winner, Terminal terminal, std::string why = {});

    GameConfig config_;
    OrientationBoard board_;
    std::unique_ptr<BreakerStrategy> breaker_;
    std::vector<Round> rounds_;
    bool maker_turn_ = true;
    std::optional<Player> winner_;
    std::optional<Terminal> terminal_;
    std::string diagnostic_;
};

using RoundObserver = std::function<void(const Round&, const OrientationBoard&)>;

Transcript play(const GameConfig& config, const RoundObserver& observer = {});

// Re-simulates a transcript. With `deep` the breaker certificate is checked
// after every round instead of only at the end.
Violations referee_check(const Transcript& t, bool deep = false);

}  // namespace arena
