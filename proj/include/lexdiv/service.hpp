#pragma once
// Read-only JSON-over-HTTP API.
//
// `Api` maps (path, query) to a response and holds no socket state, so it can
// be exercised directly; `Server` puts it behind cpp-httplib.

#include "lexdiv/analytics.hpp"
#include "lexdiv/ingest.hpp"
#include "lexdiv/layout.hpp"
#include "lexdiv/store.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace lexdiv::service {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::filesystem::path data_dir;
    std::size_t min_overlap = analytics::kDefaultMinOverlap;
    layout::LayoutParams layout;
    std::size_t layout_iterations = 500;
    double layout_eps = 1e-4;
    std::size_t default_limit = 100;
    bool use_cache = false;
};

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

using Query = std::map<std::string, std::string>;

class Api {
public:
    Api(std::shared_ptr<const Store> store, ServiceConfig config);

    ApiResponse handle(std::string_view path, const Query& query = {}) const;

    std::shared_ptr<const Store> snapshot() const { return std::atomic_load(&store_); }
    // Atomically replaces the served store; in-flight requests keep the old one.
    void swap_store(std::shared_ptr<const Store> store);

    const ServiceConfig& config() const { return config_; }

private:
    ApiResponse route(const Store& store, std::string_view path, const Query& query) const;
    ApiResponse layout(const Store& store, const Query& query) const;

    std::shared_ptr<const Store> store_;
    ServiceConfig config_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::string, std::string> layout_cache_;
};

// Thrown when the data directory does not ingest cleanly.
class StartupError : public std::runtime_error {
public:
    StartupError(const std::string& message, ingest::LoadResult result)
        : std::runtime_error(message), result_(std::move(result)) {}
    const ingest::LoadResult& result() const { return result_; }

private:
    ingest::LoadResult result_;
};

// Loads config.data_dir; throws StartupError on rejected lines or violations.
std::shared_ptr<const Store> load_store(const ServiceConfig& config);

class Server {
public:
    Server(std::shared_ptr<Api> api);
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    // Binds host:port (port 0 picks a free one); returns the bound port or -1.
    int bind(const std::string& host, int port);
    // Serves until stop(); call after bind().
    void listen();
    void stop();

    // Reloads the data directory and swaps the snapshot on success.
    void reload();

private:
    std::shared_ptr<Api> api_;
    std::unique_ptr<httplib::Server> http_;
};

}  // namespace lexdiv::service
