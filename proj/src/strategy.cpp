#include "arena/strategy.hpp"

#include "arena/monotone_breaker.hpp"
#include "arena/omaker.hpp"
#include "arena/strict_breaker.hpp"

namespace arena {

namespace {

json alpha_to_json(const AlphaStructure& s)
{
    return {{"decisive", arcs_to_json(s.decisive)}, {"rank", s.rank}};
}

class AlphaMonotone : public BreakerStrategy {
public:
    explicit AlphaMonotone(const BreakerOptions& o) : opts_(o) {}

    std::string_view name() const override { return "alpha-monotone"; }

    std::vector<Arc> respond(const OrientationBoard& board, Arc maker_arc) override
    {
        auto reply = respond_monotone(state_, board, maker_arc, opts_.b);
        state_ = std::move(reply.state);
        if (opts_.verify) {
            OrientationBoard after = board;
            for (Arc a : reply.arcs) after.direct(a);
            auto v = check(after);
            if (!v.empty()) throw ArenaError(ErrorKind::InvariantBreach, v.front().property + ": " + v.front().detail);
        }
        return reply.arcs;
    }

    std::unique_ptr<BreakerStrategy> clone() const override { return std::make_unique<AlphaMonotone>(*this); }

    Violations check(const OrientationBoard& board) const override
    {
        return check_monotone_invariants(state_, board, opts_.b);
    }

    json certificate() const override
    {
        return {{"kind", "monotone"},
                {"stage", to_string(state_.stage)},
                {"round", state_.round},
                {"a", state_.a},
                {"b", state_.b},
                {"not_b", alpha_to_json(state_.not_b)},
                {"not_a", alpha_to_json(state_.not_a)}};
    }

private:
    BreakerOptions opts_;
    MonotoneState state_;
};

class RisklessStrict : public BreakerStrategy {
public:
    explicit RisklessStrict(const BreakerOptions& o) : opts_(o) {}

    std::string_view name() const override { return "riskless-strict"; }

    std::vector<Arc> respond(const OrientationBoard& board, Arc maker_arc) override
    {
        auto reply = respond_strict(state_, board, maker_arc, opts_.b, opts_.verify);
        state_ = std::move(reply.state);
        return reply.arcs;
    }

    std::unique_ptr<BreakerStrategy> clone() const override { return std::make_unique<RisklessStrict>(*this); }

    Violations check(const OrientationBoard& board) const override
    {
        return check_strict_invariants(state_, board, opts_.b);
    }

    json certificate() const override
    {
        json j = {{"kind", "strict"}, {"stage", to_string(state_.stage)}, {"round", state_.round}};
        if (state_.stage == StrictStage::I) {
            const auto& s = state_.riskless;
            j["rank"] = state_.rank();
            j["a_star"] = s.a_star;
            j["a_zero"] = s.a_zero;
            j["b_star"] = s.b_star;
            j["b_zero"] = s.b_zero;
        } else {
            const auto& p = state_.prot;
            j["a_dead"] = p.a_dead;
            j["a_almost"] = p.a_almost;
            j["a_star"] = p.a_star;
            j["a_zero"] = p.a_zero;
            j["b_dead"] = p.b_dead;
            j["b_star"] = p.b_star;
            j["b_almost"] = p.b_almost;
            j["b_zero"] = p.b_zero;
        }
        return j;
    }

private:
    BreakerOptions opts_;
    StrictState state_;
};

class Trivial : public BreakerStrategy {
public:
    explicit Trivial(const BreakerOptions& o) : opts_(o) {}

    std::string_view name() const override { return "trivial"; }

    std::vector<Arc> respond(const OrientationBoard& board, Arc maker_arc) override
    {
        auto reply = respond_trivial(state_, board, maker_arc, opts_.b);
        state_ = std::move(reply.state);
        return reply.arcs;
    }

    std::unique_ptr<BreakerStrategy> clone() const override { return std::make_unique<Trivial>(*this); }

    Violations check(const OrientationBoard& board) const override { return check_trivial_invariant(state_, board); }

    json certificate() const override
    {
        json j = {{"kind", "trivial"}, {"spine", state_.spine}};
        j["apex"] = state_.apex ? json(*state_.apex) : json(nullptr);
        return j;
    }

private:
    BreakerOptions opts_;
    TrivialState state_;
};

class Naive : public BreakerStrategy {
public:
    explicit Naive(const BreakerOptions& o) : opts_(o) {}

    std::string_view name() const override { return "naive"; }

    std::vector<Arc> respond(const OrientationBoard& board, Arc) override
    {
        return naive_obreaker(board, opts_.b, opts_.rules);
    }

    std::unique_ptr<BreakerStrategy> clone() const override { return std::make_unique<Naive>(*this); }

private:
    BreakerOptions opts_;
};

}  // namespace

const std::vector<std::string>& breaker_names()
{
    static const std::vector<std::string> names = {"alpha-monotone", "riskless-strict", "trivial", "naive"};
    return names;
}

std::unique_ptr<BreakerStrategy> make_breaker(std::string_view name, const BreakerOptions& opts)
{
    if (name == "alpha-monotone") return std::make_unique<AlphaMonotone>(opts);
    if (name == "riskless-strict") return std::make_unique<RisklessStrict>(opts);
    if (name == "trivial") return std::make_unique<Trivial>(opts);
    if (name == "naive") return std::make_unique<Naive>(opts);
    throw ArenaError(ErrorKind::InvalidConfig, "unknown obreaker strategy '" + std::string(name) + "'");
}

}  // namespace arena
