#include "arena/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arena/engine.hpp"
#include "arena/service.hpp"
#include "arena/solver.hpp"
#include "arena/sweep.hpp"

namespace arena {

namespace {

struct PlayArgs {
    int n = 0;
    int b = 1;
    std::string rules = "monotone";
    std::string obreaker;
    std::string omaker = "close-or-random";
    std::uint64_t seed = 0;
    std::string out;
    bool certificates = false;
};

struct SweepArgs {
    std::string n;
    std::string b;
    std::string b_frac;
    std::string rules = "monotone";
    std::string obreaker;
    std::string omakers;
    std::string seeds = "0";
    int threads = 0;
    bool referee = false;
    bool certificates = false;
};

struct VerifyArgs {
    std::string in;
    bool deep = false;
};

struct SolveArgs {
    int n = 0;
    std::string b;
    std::string rules = "monotone";
    std::int64_t cap = 2'000'000;
};

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string persist_dir;
};

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_violations(const Violations& v, std::ostream& out)
{
    for (const auto& x : v) out << "violation " << x.property << ": " << x.detail << '\n';
}

int cmd_play(const PlayArgs& a, std::ostream& out, std::ostream& err)
{
    GameConfig c;
    c.n = a.n;
    c.b = a.b;
    c.rules = parse_rules(a.rules);
    c.obreaker = a.obreaker.empty() ? default_obreaker(c) : a.obreaker;
    c.omaker = a.omaker;
    c.seed = a.seed;
    c.check_certificates = a.certificates;
    if (c.omaker == "human") throw ArenaError(ErrorKind::InvalidConfig, "play needs a simulated omaker; use serve");
    validate_config(c);

    Transcript t = play(c);
    const std::string text = transcript_to_json(t).dump();
    if (a.out.empty()) {
        out << text << '\n';
    } else {
        std::ofstream f(a.out);
        if (!f) {
            err << "cannot write " << a.out << '\n';
            return kExitUsage;
        }
        f << text << '\n';
    }
    err << "winner=" << (t.winner ? to_string(*t.winner) : "none")
        << " terminal=" << (t.terminal ? to_string(*t.terminal) : "none") << " rounds=" << t.rounds.size();
    if (!t.diagnostic.empty()) err << " diagnostic=\"" << t.diagnostic << '"';
    err << '\n';
    auto v = referee_check(t);
    print_violations(v, err);
    return v.empty() ? kExitOk : kExitViolations;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.b.empty() == a.b_frac.empty()) throw ArenaError(ErrorKind::InvalidArgument, "give exactly one of --b, --b-frac");
    const auto ns = parse_int_list(a.n);
    const auto seeds = parse_int_list(a.seeds);
    const auto makers = a.omakers.empty() ? maker_names() : split(a.omakers);
    const Rules rules = parse_rules(a.rules);
    std::optional<BiasFormula> frac;
    std::vector<int> bs;
    if (!a.b_frac.empty())
        frac = parse_bias_formula(a.b_frac);
    else
        bs = parse_int_list(a.b);

    std::vector<GameConfig> configs;
    for (int n : ns) {
        std::vector<int> row_bs = frac ? std::vector<int>{frac->eval(n)} : bs;
        for (int b : row_bs)
            for (const auto& m : makers)
                for (int seed : seeds) {
                    GameConfig c;
                    c.n = n;
                    c.b = b;
                    c.rules = rules;
                    c.obreaker = a.obreaker.empty() ? default_obreaker(c) : a.obreaker;
                    c.omaker = m;
                    c.seed = static_cast<std::uint64_t>(seed);
                    c.check_certificates = a.certificates;
                    validate_config(c);
                    configs.push_back(c);
                }
    }

    auto rows = run_sweep(configs, a.threads, a.referee);
    out << csv_header() << '\n';
    int breaker_wins = 0, maker_wins = 0, max_reply = 0, violations = 0;
    for (const auto& r : rows) {
        out << csv_row(r) << '\n';
        if (r.winner == Player::OBreaker) ++breaker_wins;
        if (r.winner == Player::OMaker) ++maker_wins;
        max_reply = std::max(max_reply, r.max_reply);
        violations += r.violations;
        if (!r.diagnostic.empty()) err << "n=" << r.config.n << " seed=" << r.config.seed << ": " << r.diagnostic << '\n';
    }
    out << "# games=" << rows.size() << " obreaker_wins=" << breaker_wins << " omaker_wins=" << maker_wins
        << " max_reply=" << max_reply << " violations=" << violations << '\n';
    return violations == 0 ? kExitOk : kExitViolations;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    Transcript t;
    try {
        std::ifstream f(a.in);
        if (!f) {
            err << "cannot read " << a.in << '\n';
            return kExitUsage;
        }
        t = transcript_from_json(json::parse(f));
    } catch (const std::exception& e) {
        err << "malformed transcript: " << e.what() << '\n';
        return kExitUsage;
    }
    auto v = referee_check(t, a.deep);
    print_violations(v, out);
    out << (v.empty() ? "clean" : std::to_string(v.size()) + " violation(s)") << '\n';
    return v.empty() ? kExitOk : kExitViolations;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err)
{
    const Rules rules = parse_rules(a.rules);
    out << "n,b,rules,winner,positions\n";
    for (int b : parse_int_list(a.b)) {
        try {
            auto r = solve_exact(a.n, b, rules, a.cap);
            out << r.n << ',' << r.b << ',' << to_string(r.rules) << ',' << to_string(r.winner) << ',' << r.positions
                << '\n';
        } catch (const ArenaError& e) {
            if (e.kind() != ErrorKind::Unsolved) throw;
            err << e.what() << '\n';
            out << a.n << ',' << b << ',' << to_string(rules) << ",unsolved,\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Biased oriented-cycle game arena", "arena"};
    app.require_subcommand(1);

    PlayArgs play_args;
    auto* play = app.add_subcommand("play", "Play one simulated game and write its transcript");
    play->add_option("--n", play_args.n, "Number of vertices")->required();
    play->add_option("--b", play_args.b, "OBreaker bias")->required();
    play->add_option("--rules", play_args.rules, "monotone or strict")->check(CLI::IsMember({"monotone", "strict"}));
    play->add_option("--obreaker", play_args.obreaker, "OBreaker strategy");
    play->add_option("--omaker", play_args.omaker, "OMaker adversary");
    play->add_option("--seed", play_args.seed, "Adversary seed");
    play->add_option("--out", play_args.out, "Transcript file (stdout when omitted)");
    play->add_flag("--check-certificates", play_args.certificates, "Validate the certificate after every reply");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Run a grid of games and print CSV");
    sweep->add_option("--n", sweep_args.n, "a..b[:step] or a,b,c")->required();
    sweep->add_option("--b", sweep_args.b, "Absolute biases, same syntax as --n");
    sweep->add_option("--b-frac", sweep_args.b_frac, "Bias as ceil(p*n/q)+c, written p/q[+-c]");
    sweep->add_option("--rules", sweep_args.rules, "monotone or strict")->check(CLI::IsMember({"monotone", "strict"}));
    sweep->add_option("--obreaker", sweep_args.obreaker, "OBreaker strategy");
    sweep->add_option("--omaker", sweep_args.omakers, "Comma separated adversaries (all when omitted)");
    sweep->add_option("--seeds", sweep_args.seeds, "Seed list or range");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (ARENA_THREADS or OpenMP default)");
    sweep->add_flag("--referee", sweep_args.referee, "Referee every transcript");
    sweep->add_flag("--check-certificates", sweep_args.certificates, "Validate certificates after every reply");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Referee a transcript file");
    verify->add_option("--in", verify_args.in, "Transcript JSON")->required();
    verify->add_flag("--deep", verify_args.deep, "Check the certificate after every round");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Exact minimax for tiny boards");
    solve->add_option("--n", solve_args.n, "Number of vertices")->required();
    solve->add_option("--b", solve_args.b, "Bias list or range")->required();
    solve->add_option("--rules", solve_args.rules, "monotone or strict")->check(CLI::IsMember({"monotone", "strict"}));
    solve->add_option("--cap", solve_args.cap, "Position cap");

    ServeArgs serve_args;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the interactive HTTP API");
    serve_cmd->add_option("--host", serve_args.host, "Bind address");
    serve_cmd->add_option("--port", serve_args.port, "Port");
    serve_cmd->add_option("--persist-dir", serve_args.persist_dir, "Append transcripts here as JSON lines");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*play) return cmd_play(play_args, out, err);
        if (*sweep) return cmd_sweep(sweep_args, out, err);
        if (*verify) return cmd_verify(verify_args, out, err);
        if (*solve) return cmd_solve(solve_args, out, err);
        if (*serve_cmd) return serve(serve_args.host, serve_args.port, {serve_args.persist_dir});
    } catch (const ArenaError& e) {
        const bool usage = e.kind() == ErrorKind::InvalidConfig || e.kind() == ErrorKind::InvalidArgument;
        err << "error: " << e.what() << '\n';
        return usage ? kExitUsage : kExitViolations;
    }
    return kExitUsage;
}

}  // namespace arena
