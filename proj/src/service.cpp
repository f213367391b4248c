#include "lexdiv/service.hpp"

#include "lexdiv/export.hpp"
#include "lexdiv/json.hpp"

#include <httplib.h>

#include <charconv>
#include <cstdio>
#include <sstream>

namespace lexdiv::service {

namespace {

using Json = nlohmann::json;

int http_status(const std::string& code) {
    if (code == errc::unknown_language || code == errc::unknown_concept || code == errc::unknown_root ||
        code == errc::not_found)
        return 404;
    if (code == errc::precondition || code == errc::invalid_argument || code == errc::same_language) return 400;
    if (code == errc::no_lexicalisation) return 422;
    return 500;
}

ApiResponse error_response(const std::string& code, const std::string& message) {
    return {http_status(code), "application/json", json::error_envelope(code, message).dump()};
}

ApiResponse ok(const Json& body) { return {200, "application/json", body.dump()}; }

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) pos = s.size();
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::optional<std::string> param(const Query& q, const std::string& name) {
    auto it = q.find(name);
    if (it == q.end() || it->second.empty()) return std::nullopt;
    return it->second;
}

template <typename T>
T integer_param(const Query& q, const std::string& name, T fallback) {
    auto v = param(q, name);
    if (!v) return fallback;
    T out{};
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc{} || ptr != v->data() + v->size())
        throw Error(errc::invalid_argument, "query parameter '" + name + "' must be an integer");
    return out;
}

double real_param(const Query& q, const std::string& name, double fallback) {
    auto v = param(q, name);
    if (!v) return fallback;
    double out = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc{} || ptr != v->data() + v->size())
        throw Error(errc::invalid_argument, "query parameter '" + name + "' must be a number");
    return out;
}

std::string require_param(const Query& q, const std::string& name) {
    auto v = param(q, name);
    if (!v) throw Error(errc::invalid_argument, "missing query parameter '" + name + "'");
    return *v;
}

Json paginate(const Json& items, const Query& q, std::size_t default_limit) {
    auto offset = integer_param<std::size_t>(q, "offset", 0);
    auto limit = integer_param<std::size_t>(q, "limit", default_limit);
    Json page = Json::array();
    for (std::size_t i = offset; i < items.size() && i - offset < limit; ++i) page.push_back(items[i]);
    return {{"items", page}, {"total", items.size()}, {"offset", offset}, {"limit", limit}};
}

}  // namespace

Api::Api(std::shared_ptr<const Store> store, ServiceConfig config)
    : store_(std::move(store)), config_(std::move(config)) {}

void Api::swap_store(std::shared_ptr<const Store> store) {
    std::lock_guard lock(cache_mutex_);
    std::atomic_store(&store_, std::move(store));
    layout_cache_.clear();
}

ApiResponse Api::handle(std::string_view path, const Query& query) const {
    auto store = snapshot();
    try {
        return route(*store, path, query);
    } catch (const Error& e) {
        return error_response(e.code(), e.what());
    } catch (const std::exception& e) {
        return error_response("internal", e.what());
    }
}

ApiResponse Api::route(const Store& store, std::string_view path, const Query& q) const {
    if (path.size() > 1 && path.back() == '/') path.remove_suffix(1);
    auto seg = split(path, '/');
    // seg[0] is the empty string before the leading slash.
    if (seg.size() < 3 || !seg[0].empty() || seg[1] != "v1") throw Error(errc::not_found, "no such endpoint");
    const std::string& area = seg[2];
    const std::size_t n = seg.size();

    if (area == "health" && n == 3) {
        return ok({{"status", "ok"},
                   {"languages", store.languages().size()},
                   {"concepts", store.concepts().size()},
                   {"senses", store.senses().size()}});
    }

    if (area == "languages") {
        if (n == 3) {
            Json items = Json::array();
            for (const auto& [code, lang] : store.languages()) {
                Json item = json::encode(lang);
                item["lexicon_size"] = store.senses_of_language(code).size();
                items.push_back(std::move(item));
            }
            return ok(paginate(items, q, config_.default_limit));
        }
        if (n == 4) return ok(json::encode(store.language_profile(seg[3])));
        if (n == 6 && seg[4] == "words") {
            Json matches = Json::array();
            for (const auto& m : store.lookup_word(seg[3], seg[5])) matches.push_back(json::encode(m));
            return ok({{"language", seg[3]}, {"lemma", seg[5]}, {"matches", matches}});
        }
    }

    if (area == "concepts" && n >= 4) {
        const std::string& id = seg[3];
        if (n == 4) {
            const Concept* c = store.find_concept(id);
            if (!c) throw Error(errc::unknown_concept, "unknown concept '" + id + "'");
            Json body = json::encode(*c);
            Json relations = Json::array();
            for (const auto& rel : store.concept_relations())
                if (rel.source == id || rel.target == id) relations.push_back(json::encode(rel));
            body["relations"] = relations;
            return ok(body);
        }
        if (n == 5 && seg[4] == "lexicalisations")
            return ok(json::encode_lexicalisations(id, store.concept_lexicalisations(id)));
        if (n == 5 && seg[4] == "clusters") return ok(json::encode(analytics::cognate_clusters(store, id), store));
        if (n == 5 && seg[4] == "diversity") return ok(json::encode(id, analytics::diversity_index(store, id)));
        if (n == 5 && seg[4] == "neighborhood") {
            std::string lang = require_param(q, "lang");
            int depth = integer_param<int>(q, "depth", 1);
            std::vector<ConceptRelationKind> kinds = all_concept_relation_kinds();
            if (auto k = param(q, "kinds")) {
                kinds.clear();
                for (const auto& token : split(*k, ',')) {
                    auto kind = parse_concept_relation_kind(token);
                    if (!kind) throw Error(errc::invalid_argument, "unknown relation kind '" + token + "'");
                    kinds.push_back(*kind);
                }
            }
            return ok(json::encode(store.neighborhood(id, lang, depth, kinds)));
        }
    }

    if (area == "domains" && n == 5 && seg[4] == "tree")
        return ok(json::encode(store.domain_tree(seg[3], require_param(q, "lang"))));

    if (area == "similarity") {
        if (n == 3) {
            auto min_overlap = integer_param<std::size_t>(q, "min_overlap", config_.min_overlap);
            Json items = Json::array();
            for (const auto& r : analytics::similarity_matrix(store, min_overlap)) items.push_back(json::encode(r));
            Json body = paginate(items, q, config_.default_limit);
            body["min_overlap"] = min_overlap;
            return ok(body);
        }
        if (n == 4 && seg[3] == "layout") return layout(store, q);
    }

    if (area == "export" && n >= 4) {
        std::ostringstream out;
        if (seg[3] == "lexicon" && n == 5) {
            auto format = exports::parse_lexicon_format(param(q, "format").value_or("lmf"));
            if (!format) throw Error(errc::invalid_argument, "format must be lmf or tsv");
            exports::export_lexicon(store, seg[4], *format, out);
            return {200, *format == exports::LexiconFormat::lmf_xml ? "application/xml" : "text/tab-separated-values",
                    out.str()};
        }
        if (seg[3] == "lexicon-set" && n == 4) {
            auto langs = split(require_param(q, "langs"), ',');
            exports::export_lexicon_set(store, langs, out);
            return {200, "text/tab-separated-values", out.str()};
        }
        if (seg[3] == "raw" && n == 5) {
            auto kind = exports::parse_raw_kind(seg[4]);
            if (!kind) throw Error(errc::not_found, "unknown raw dataset '" + seg[4] + "'");
            auto min_overlap = integer_param<std::size_t>(q, "min_overlap", config_.min_overlap);
            exports::export_raw(store, *kind, out, min_overlap);
            return {200, "text/tab-separated-values", out.str()};
        }
    }

    throw Error(errc::not_found, "no such endpoint");
}

ApiResponse Api::layout(const Store& store, const Query& q) const {
    double threshold = real_param(q, "threshold", 0.0);
    layout::LayoutParams params = config_.layout;
    params.seed = integer_param<std::uint64_t>(q, "seed", params.seed);
    auto iterations = integer_param<std::size_t>(q, "iterations", config_.layout_iterations);
    auto min_overlap = integer_param<std::size_t>(q, "min_overlap", config_.min_overlap);
    if (iterations < 1 || iterations > 100000)
        throw Error(errc::invalid_argument, "iterations must lie in [1, 100000]");

    std::string key = json::encode(params).dump() + "|" + std::to_string(threshold) + "|" +
                      std::to_string(iterations) + "|" + std::to_string(min_overlap);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = layout_cache_.find(key); it != layout_cache_.end()) return {200, "application/json", it->second};
    }

    std::vector<std::string> languages;
    for (const auto& [code, lang] : store.languages()) languages.push_back(code);
    auto graph = layout::build_graph(analytics::similarity_matrix(store, min_overlap), threshold, languages);
    auto result = layout::run(graph, params, iterations, config_.layout_eps);
    Json body = json::encode_layout(graph, result, store);
    body["threshold"] = threshold;
    body["min_overlap"] = min_overlap;
    body["params"] = json::encode(params);
    std::string text = body.dump();

    std::lock_guard lock(cache_mutex_);
    layout_cache_.emplace(key, text);
    return {200, "application/json", text};
}

std::shared_ptr<const Store> load_store(const ServiceConfig& config) {
    auto result = ingest::load_data_dir(config.data_dir, config.use_cache);
    if (!result.clean()) {
        std::string message = "data directory " + config.data_dir.string() + " failed validation: " +
                              std::to_string(result.report.rejected.size()) + " rejected lines, " +
                              std::to_string(result.violations.size()) + " invariant violations";
        throw StartupError(message, std::move(result));
    }
    return std::make_shared<const Store>(std::move(result.store));
}

Server::Server(std::shared_ptr<Api> api) : api_(std::move(api)), http_(std::make_unique<httplib::Server>()) {
    http_->Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
        Query query;
        for (const auto& [k, v] : req.params) query.emplace(k, v);
        ApiResponse r = api_->handle(req.path, query);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
    if (port == 0) return http_->bind_to_any_port(host);
    return http_->bind_to_port(host, port) ? port : -1;
}

void Server::listen() { http_->listen_after_bind(); }

void Server::stop() {
    if (http_) http_->stop();
}

void Server::reload() { api_->swap_store(load_store(api_->config())); }

}  // namespace lexdiv::service
