#include "arena/service.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "httplib.h"

namespace arena {

namespace {

Reply error(int status, const std::string& message)
{
    return {status, {{"error", message}}};
}

std::string verdict(const Match& m)
{
    if (!m.winner()) return {};
    return *m.winner() == Player::OMaker ? "OMakerWins" : "OBreakerWins";
}

}  // namespace

GameService::GameService(ServiceOptions options) : options_(std::move(options))
{
    if (!options_.persist_dir.empty()) std::filesystem::create_directories(options_.persist_dir);
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id)
{
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

json GameService::state_json(const Session& s) const
{
    const Match& m = s.match;
    json j;
    j["id"] = s.id;
    j["config"] = config_to_json(m.config());
    j["board"] = board_to_json(m.board());
    j["turn"] = m.finished() ? json(nullptr) : json(m.maker_to_move() ? "OMaker" : "OBreaker");
    j["finished"] = m.finished();
    j["winner"] = m.winner() ? json(to_string(*m.winner())) : json(nullptr);
    j["terminal"] = m.terminal() ? json(to_string(*m.terminal())) : json(nullptr);
    j["threats"] = m.finished() ? json::array() : arcs_to_json(closing_arcs(m.board()));
    j["certificate"] = m.breaker().certificate();
    j["rounds"] = m.rounds().size();
    if (!m.diagnostic().empty()) j["diagnostic"] = m.diagnostic();
    return j;
}

void GameService::persist(const Session& s) const
{
    if (options_.persist_dir.empty()) return;
    std::ofstream out(std::filesystem::path(options_.persist_dir) / "transcripts.jsonl", std::ios::app);
    out << json{{"id", s.id}, {"transcript", transcript_to_json(s.match.transcript())}}.dump() << '\n';
}

Reply GameService::create(const std::string& body)
{
    GameConfig config;
    try {
        json j = json::parse(body);
        if (!j.is_object()) return error(400, "body must be a JSON object");
        config = config_from_json(j);
        config.obreaker = j.contains("obreaker") ? j["obreaker"].get<std::string>() : default_obreaker(config);
        config.omaker = "human";
        validate_config(config);
    } catch (const std::exception& e) {
        return error(400, e.what());
    }

    std::shared_ptr<Session> session;
    {
        std::lock_guard lock(sessions_mutex_);
        std::string id = "g" + std::to_string(next_id_++);
        session = std::make_shared<Session>(id, config);
        sessions_.emplace(id, session);
    }
    std::lock_guard lock(session->mutex);
    persist(*session);
    return {201, {{"id", session->id}, {"state", state_json(*session)}}};
}

Reply GameService::move(const std::string& id, const std::string& body)
{
    auto session = find(id);
    if (!session) return error(404, "unknown game '" + id + "'");
    Arc arc;
    try {
        json j = json::parse(body);
        arc = {j.at("tail").get<Vertex>(), j.at("head").get<Vertex>()};
    } catch (const std::exception& e) {
        return error(400, e.what());
    }

    std::lock_guard lock(session->mutex);
    Match& m = session->match;
    if (m.finished()) return error(410, "game is over");
    try {
        m.apply_maker(arc);
    } catch (const ArenaError& e) {
        return error(409, e.what());
    }
    json reply = json::array();
    if (!m.finished()) {
        m.breaker_reply();
        reply = arcs_to_json(m.rounds().back().breaker);
    }
    persist(*session);
    json out{{"breakerArcs", reply}, {"state", state_json(*session)}};
    if (m.finished()) out["terminal"] = verdict(m);
    return {200, out};
}

Reply GameService::state(const std::string& id)
{
    auto session = find(id);
    if (!session) return error(404, "unknown game '" + id + "'");
    std::lock_guard lock(session->mutex);
    return {200, state_json(*session)};
}

Reply GameService::transcript(const std::string& id)
{
    auto session = find(id);
    if (!session) return error(404, "unknown game '" + id + "'");
    std::lock_guard lock(session->mutex);
    return {200, transcript_to_json(session->match.transcript())};
}

void GameService::install(httplib::Server& server)
{
    auto send = [](httplib::Response& res, const Reply& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/games", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, create(req.body));
    });
    server.Post(R"(/games/([^/]+)/move)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, move(req.matches[1], req.body));
    });
    server.Get(R"(/games/([^/]+)/transcript)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, transcript(req.matches[1]));
    });
    server.Get(R"(/games/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, state(req.matches[1]));
    });
}

int serve(const std::string& host, int port, ServiceOptions options)
{
    GameService service(std::move(options));
    httplib::Server server;
    service.install(server);
    std::cerr << "listening on " << host << ":" << port << '\n';
    if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << '\n';
        return 2;
    }
    return 0;
}

}  // namespace arena
