#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arena/engine.hpp"

namespace arena {

// b as ceil(p * n / q) + c, parsed from "p/q", "p/q+c" or "p/q-c".
struct BiasFormula {
    long long p = 1;
    long long q = 1;
    long long c = 0;

    int eval(int n) const;
};

BiasFormula parse_bias_formula(std::string_view s);

// "a..b", "a..b:step" or "x,y,z".
std::vector<int> parse_int_list(std::string_view s);

struct SweepRow {
    GameConfig config;
    std::optional<Player> winner;
    std::optional<Terminal> terminal;
    int max_reply = 0;
    int rounds = 0;
    int violations = 0;  // referee findings, when requested
    std::string diagnostic;
};

SweepRow summarize(const Transcript& t, int violations);

// Runs the games one after another.
std::vector<SweepRow> run_sweep_serial(const std::vector<GameConfig>& configs, bool referee = false);

// Same rows in the same order, games spread over OpenMP threads. threads <= 0
// uses ARENA_THREADS when set, otherwise the OpenMP default.
std::vector<SweepRow> run_sweep(const std::vector<GameConfig>& configs, int threads = 0, bool referee = false);

int default_threads();

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace arena
