#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "arena/engine.hpp"

namespace httplib {
class Server;
}

namespace arena {

struct ServiceOptions {
    std::string persist_dir;  // empty: sessions live in memory only
};

struct Reply {
    int status = 200;
    json body;
};

// Interactive sessions: a human plays OMaker, the engine plays OBreaker.
// Each handler returns the HTTP status and JSON body so it can be driven
// without a socket.
class GameService {
public:
    explicit GameService(ServiceOptions options = {});

    Reply create(const std::string& body);
    Reply move(const std::string& id, const std::string& body);
    Reply state(const std::string& id);
    Reply transcript(const std::string& id);

    // Registers the routes plus CORS handling on `server`.
    void install(httplib::Server& server);

private:
    struct Session {
        std::mutex mutex;
        std::string id;
        Match match;

        explicit Session(std::string id_, const GameConfig& config) : id(std::move(id_)), match(config) {}
    };

    std::shared_ptr<Session> find(const std::string& id);
    json state_json(const Session& s) const;
    void persist(const Session& s) const;

    ServiceOptions options_;
    std::mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_id_ = 1;
};

// Blocks serving on host:port until the process is stopped.
int serve(const std::string& host, int port, ServiceOptions options);

}  // namespace arena
