#include "lexdiv/export.hpp"
#include "lexdiv/fixtures.hpp"
#include "lexdiv/json.hpp"
#include "lexdiv/service.hpp"

#include "support.hpp"

#include <doctest.h>
#include <httplib.h>

#include <sstream>
#include <thread>

using namespace lexdiv;
using namespace lexdiv::service;
using Json = nlohmann::json;

namespace {

std::shared_ptr<Api> make_api(Store store, ServiceConfig config = {}) {
    config.min_overlap = 1;
    config.layout_iterations = 200;
    return std::make_shared<Api>(std::make_shared<const Store>(std::move(store)), config);
}

Json get(const Api& api, const std::string& path, const Query& q = {}) {
    auto r = api.handle(path, q);
    INFO(path << " -> " << r.body);
    REQUIRE(r.status == 200);
    REQUIRE(r.content_type == "application/json");
    return Json::parse(r.body);
}

std::pair<int, std::string> error_of(const Api& api, const std::string& path, const Query& q = {}) {
    auto r = api.handle(path, q);
    auto body = Json::parse(r.body);
    REQUIRE(body.contains("error"));
    CHECK(body["error"]["message"].is_string());
    return {r.status, body["error"]["code"].get<std::string>()};
}

}  // namespace

TEST_CASE("endpoints agree with the query modules") {
    Store s = fixtures::f1_f2_store();
    auto api = make_api(s);

    CHECK(get(*api, "/v1/health")["status"] == "ok");

    auto langs = get(*api, "/v1/languages");
    CHECK(langs["total"] == s.languages().size());
    CHECK(langs["items"][0]["code"] == s.languages().begin()->first);

    CHECK(get(*api, "/v1/languages/eng") == json::encode(s.language_profile("eng")));
    CHECK(get(*api, "/v1/languages/ita/words/pesce")["matches"] == [&] {
        Json m = Json::array();
        for (const auto& w : s.lookup_word("ita", "pesce")) m.push_back(json::encode(w));
        return m;
    }());
    CHECK(get(*api, "/v1/concepts/fish/lexicalisations") ==
          json::encode_lexicalisations("fish", s.concept_lexicalisations("fish")));
    CHECK(get(*api, "/v1/concepts/fish/clusters") == json::encode(analytics::cognate_clusters(s, "fish"), s));
    CHECK(get(*api, "/v1/concepts/fish/diversity") == json::encode("fish", analytics::diversity_index(s, "fish")));
    CHECK(get(*api, "/v1/concepts/fish/diversity")["index"] == 1.0 / 3.0);
    CHECK(get(*api, "/v1/concepts/cousin/neighborhood", {{"lang", "eng"}, {"depth", "2"}, {"kinds", "is-a"}}) ==
          json::encode(s.neighborhood("cousin", "eng", 2, {ConceptRelationKind::is_a})));
    auto tree = get(*api, "/v1/domains/cousin/tree", {{"lang", "dra"}});
    CHECK(tree == json::encode(s.domain_tree("cousin", "dra")));
    CHECK(tree["counts"]["lexicalised"] == 16);

    auto concept_body = get(*api, "/v1/concepts/fish");
    CHECK(concept_body["gloss"] == s.find_concept("fish")->gloss);

    auto sim = get(*api, "/v1/similarity");
    Json expected = Json::array();
    for (const auto& r : analytics::similarity_matrix(s, 1)) expected.push_back(json::encode(r));
    CHECK(sim["items"] == expected);
    CHECK(get(*api, "/v1/similarity", {{"min_overlap", "50"}})["items"].empty());

    std::ostringstream xml;
    exports::export_lexicon(s, "eng", exports::LexiconFormat::lmf_xml, xml);
    auto lmf = api->handle("/v1/export/lexicon/eng");
    CHECK(lmf.status == 200);
    CHECK(lmf.content_type == "application/xml");
    CHECK(lmf.body == xml.str());

    std::ostringstream set;
    exports::export_lexicon_set(s, {"eng", "dra"}, set);
    CHECK(api->handle("/v1/export/lexicon-set", {{"langs", "eng,dra"}}).body == set.str());
    std::ostringstream gaps;
    exports::export_raw(s, exports::RawKind::gaps, gaps);
    CHECK(api->handle("/v1/export/raw/gaps").body == gaps.str());
    CHECK(api->handle("/v1/concepts/fish/").status == 200);
}

TEST_CASE("errors use the envelope and the status mapping") {
    auto api = make_api(fixtures::f1_store());
    CHECK(error_of(*api, "/v1/languages/xxx") == std::pair{404, std::string(errc::unknown_language)});
    CHECK(error_of(*api, "/v1/concepts/nope") == std::pair{404, std::string(errc::unknown_concept)});
    CHECK(error_of(*api, "/v1/domains/nope/tree", {{"lang", "eng"}}) == std::pair{404, std::string(errc::unknown_root)});
    CHECK(error_of(*api, "/v2/health").first == 404);
    CHECK(error_of(*api, "/v1/nothing").first == 404);
    CHECK(error_of(*api, "/v1/export/raw/bogus").first == 404);
    CHECK(error_of(*api, "/v1/concepts/fish/neighborhood", {{"lang", "eng"}, {"depth", "0"}}) ==
          std::pair{400, std::string(errc::precondition)});
    CHECK(error_of(*api, "/v1/concepts/fish/neighborhood", {{"lang", "eng"}, {"depth", "x"}}) ==
          std::pair{400, std::string(errc::invalid_argument)});
    CHECK(error_of(*api, "/v1/concepts/fish/neighborhood").first == 400);
    CHECK(error_of(*api, "/v1/concepts/fish/neighborhood", {{"lang", "eng"}, {"kinds", "sibling"}}).first == 400);
    CHECK(error_of(*api, "/v1/export/lexicon-set", {{"langs", "eng"}}).first == 400);
    CHECK(error_of(*api, "/v1/export/lexicon/eng", {{"format", "pdf"}}).first == 400);
    CHECK(error_of(*api, "/v1/similarity/layout", {{"threshold", "2"}}).first == 400);
    CHECK(error_of(*api, "/v1/similarity/layout", {{"iterations", "0"}}).first == 400);

    Store s = fixtures::f1_store();
    s.put(Concept{"unused", "nothing"});
    auto with_unused = make_api(s);
    CHECK(error_of(*with_unused, "/v1/concepts/unused/diversity") ==
          std::pair{422, std::string(errc::no_lexicalisation)});
}

TEST_CASE("pagination") {
    auto api = make_api(fixtures::f1_f2_store());
    auto all = get(*api, "/v1/languages", {{"limit", "1000"}})["items"];
    Json stitched = Json::array();
    for (std::size_t offset = 0; offset < all.size(); offset += 3) {
        auto page = get(*api, "/v1/languages", {{"offset", std::to_string(offset)}, {"limit", "3"}});
        CHECK(page["total"] == all.size());
        CHECK(page["items"].size() <= 3);
        for (const auto& item : page["items"]) stitched.push_back(item);
    }
    CHECK(stitched == all);
    CHECK(get(*api, "/v1/languages", {{"offset", "100"}})["items"].empty());
}

TEST_CASE("repeated requests are byte-identical and layouts are cached per seed") {
    auto api = make_api(fixtures::f1_f2_store());
    for (const char* path : {"/v1/languages", "/v1/similarity", "/v1/concepts/fish/clusters", "/v1/export/raw/clusters"})
        CHECK(api->handle(path).body == api->handle(path).body);

    auto a = api->handle("/v1/similarity/layout", {{"seed", "7"}});
    auto b = api->handle("/v1/similarity/layout", {{"seed", "7"}});
    auto c = api->handle("/v1/similarity/layout", {{"seed", "8"}});
    CHECK(a.status == 200);
    CHECK(a.body == b.body);
    CHECK(a.body != c.body);

    auto body = Json::parse(a.body);
    CHECK(body["nodes"].size() == 8);
    CHECK(body["params"]["seed"] == 7);
    for (const auto& node : body["nodes"]) {
        CHECK(node["x"].is_number());
        CHECK(node.contains("phylum"));
    }

    // a fresh Api with the same seed reproduces the cached layout
    auto other = make_api(fixtures::f1_f2_store());
    CHECK(other->handle("/v1/similarity/layout", {{"seed", "7"}}).body == a.body);
}

TEST_CASE("swapping the store") {
    auto api = make_api(fixtures::f1_store());
    auto before = api->handle("/v1/similarity/layout");
    CHECK(get(*api, "/v1/health")["languages"] == 6);
    auto held = api->snapshot();

    api->swap_store(std::make_shared<const Store>(fixtures::f1_f2_store()));
    CHECK(get(*api, "/v1/health")["languages"] == 8);
    CHECK(held->languages().size() == 6);
    CHECK(api->handle("/v1/similarity/layout").body != before.body);
}

TEST_CASE("startup rejects an unclean data directory") {
    auto dir = support::temp_dir("service-startup");
    auto files = fixtures::f1();
    files["senses"] += "eng\t\tfish\tf1\n";
    fixtures::write_dir(files, dir);
    ServiceConfig config;
    config.data_dir = dir;
    try {
        load_store(config);
        FAIL("unclean directory accepted");
    } catch (const StartupError& e) {
        CHECK(e.result().report.rejected.size() == 1);
    }

    fixtures::write_dir(fixtures::f1(), dir);
    CHECK(load_store(config)->senses().size() == 8);
}

TEST_CASE("real HTTP server") {
    auto dir = support::temp_dir("service-http");
    fixtures::write_dir(fixtures::f1(), dir);
    ServiceConfig config;
    config.data_dir = dir;
    config.min_overlap = 1;
    auto api = std::make_shared<Api>(load_store(config), config);
    Server server(api);
    int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread thread([&] { server.listen(); });

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/v1/health");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(Json::parse(health->body)["languages"] == 6);

    auto words = client.Get("/v1/languages/ita/words/pesce");
    REQUIRE(words);
    CHECK(words->body == api->handle("/v1/languages/ita/words/pesce").body);

    auto tree = client.Get("/v1/concepts/fish/neighborhood?lang=eng&depth=1");
    REQUIRE(tree);
    CHECK(tree->status == 200);

    auto missing = client.Get("/v1/languages/xxx");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    CHECK(Json::parse(missing->body)["error"]["code"] == "unknown-language");

    fixtures::write_dir(fixtures::combine(fixtures::f1(), fixtures::f2()), dir);
    server.reload();
    CHECK(Json::parse(client.Get("/v1/health")->body)["languages"] == 8);

    server.stop();
    thread.join();
}
