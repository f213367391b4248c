#include "lexdiv/analytics.hpp"
#include "lexdiv/fixtures.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace lexdiv;
using namespace lexdiv::analytics;

namespace {

support::Partition as_partition(const CognateClustering& c) {
    support::Partition out;
    for (const auto& cluster : c.clusters) out.insert(std::set<std::string>(cluster.begin(), cluster.end()));
    return out;
}

std::optional<double> score(const Store& s, const std::string& a, const std::string& b, std::size_t min = 1) {
    auto r = lexicon_similarity(s, a, b, min);
    return r ? std::optional<double>(r->score) : std::nullopt;
}

}  // namespace

TEST_CASE("cognate clusters on F1") {
    Store s = fixtures::f1_store();
    auto fish = cognate_clusters(s, "fish");
    CHECK(as_partition(fish) == support::Partition{{"eng:fish:fish", "ita:fish:pesce"}, {"fin:fish:kala", "hun:fish:hal"}});
    CHECK(fish.language_cluster.at("eng") == fish.language_cluster.at("ita"));
    CHECK(fish.language_cluster.at("hun") == fish.language_cluster.at("fin"));
    CHECK(fish.language_cluster.at("eng") != fish.language_cluster.at("hun"));
    CHECK(fish.ambiguous.empty());

    auto cooked = cognate_clusters(s, "cooked-rice");
    REQUIRE(cooked.clusters.size() == 1);
    CHECK(cooked.clusters[0] == std::vector<std::string>{"kan:cooked-rice:s-cooked"});

    try {
        cognate_clusters(s, "nope");
        FAIL("unknown concept accepted");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_concept);
    }
}

TEST_CASE("cognate clusters equal DFS components on random sense graphs") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> size(0, 200);
    for (int round = 0; round < 100; ++round) {
        auto rc = support::random_concept(rng, size(rng));
        auto got = cognate_clusters(rc.store, "c");
        CHECK(as_partition(got) == support::dfs_components(rc.sense_ids, rc.edges));

        // language -> cluster of the lexicographically first lemma
        std::map<std::string, std::string> first;
        std::map<std::string, std::set<std::size_t>> spans;
        std::map<std::string, std::size_t> cluster_of;
        for (std::size_t c = 0; c < got.clusters.size(); ++c)
            for (const auto& id : got.clusters[c]) cluster_of[id] = c;
        for (const auto& id : rc.sense_ids) {
            const Sense* sense = rc.store.find_sense(id);
            auto it = first.find(sense->language);
            if (it == first.end() || rc.store.find_sense(it->second)->lemma > sense->lemma) first[sense->language] = id;
            spans[sense->language].insert(cluster_of.at(id));
        }
        for (const auto& [lang, id] : first) CHECK(got.language_cluster.at(lang) == cluster_of.at(id));
        for (const auto& [lang, clusters] : spans) CHECK(got.ambiguous.count(lang) == (clusters.size() > 1 ? 1u : 0u));
    }
}

TEST_CASE("diversity index") {
    Store s = fixtures::f1_store();
    auto fish = diversity_index(s, "fish");
    CHECK(fish.languages == 4);
    CHECK(fish.clusters == 2);
    CHECK(fish.index == 1.0 / 3.0);

    auto rice = diversity_index(s, "rice-general");
    CHECK(rice.index == 0.0);
    CHECK(diversity_index(s, "cooked-rice").index == 0.0);

    SUBCASE("all singletons is fully diverse") {
        s.put(Concept{"water", "clear liquid"});
        for (const char* code : {"eng", "ita", "hun"}) s.put(Sense{"", code, std::string("w-") + code, "water", "f1"});
        CHECK(diversity_index(s, "water").index == 1.0);
    }
    SUBCASE("errors") {
        s.put(Concept{"unused", "no words"});
        try {
            diversity_index(s, "unused");
            FAIL("unlexicalised concept accepted");
        } catch (const Error& e) {
            CHECK(e.code() == errc::no_lexicalisation);
        }
        CHECK_THROWS_AS(diversity_index(s, "nope"), Error);
    }
}

TEST_CASE("diversity index is bounded and monotone in k") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(1, 60);
    for (int round = 0; round < 200; ++round) {
        auto rc = support::random_concept(rng, size(rng));
        auto d = diversity_index(rc.store, "c");
        CHECK(d.index >= 0.0);
        CHECK(d.index <= 1.0);
        if (d.languages > 1)
            CHECK(d.index == doctest::Approx(double(d.clusters - 1) / double(d.languages - 1)).epsilon(1e-15));
    }
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            // n languages, k clusters: link languages 0..n-k into one chain
            auto build = [&](std::size_t clusters) {
                Store s;
                s.put(support::open_source());
                s.put(Concept{"c", "g"});
                for (std::size_t i = 0; i < n; ++i) {
                    s.put(LanguageDescriptor{support::code(i), "L"});
                    s.put(Sense{"", support::code(i), "w", "c", "src"});
                }
                for (std::size_t i = 1; i <= n - clusters; ++i)
                    s.put(CrossLingualRelation::canonical(make_sense_id(support::code(0), "c", "w"),
                                                          make_sense_id(support::code(i), "c", "w"), "src"));
                return diversity_index(s, "c");
            };
            auto lo = build(k), hi = build(k + 1);
            CHECK(lo.clusters == k);
            CHECK(hi.clusters == k + 1);
            CHECK(lo.index < hi.index);
        }
}

TEST_CASE("lexicon similarity on F1") {
    Store s = fixtures::f1_store();
    auto eng_ita = lexicon_similarity(s, "eng", "ita", 1);
    REQUIRE(eng_ita);
    CHECK(eng_ita->overlap == 2);
    CHECK(eng_ita->cognate_overlap == 2);
    CHECK(eng_ita->score == 1.0);
    CHECK(lexicon_similarity(s, "ita", "eng", 1) == eng_ita);

    CHECK_FALSE(lexicon_similarity(s, "hun", "kan", 1));
    CHECK_FALSE(lexicon_similarity(s, "hun", "kan", 0));  // no shared concept is undefined, not zero
    CHECK_FALSE(lexicon_similarity(s, "eng", "ita", 3));
    CHECK_FALSE(lexicon_similarity(s, "eng", "ita"));  // default floor of 20

    auto code = [&](const char* a, const char* b) {
        try {
            lexicon_similarity(s, a, b, 1);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("none");
    };
    CHECK(code("eng", "eng") == errc::same_language);
    CHECK(code("eng", "xxx") == errc::unknown_language);
}

TEST_CASE("two synthetic lexicons sharing 10 concepts with cognates on 4") {
    Store s;
    s.put(support::open_source());
    s.put(LanguageDescriptor{"aaa", "A"});
    s.put(LanguageDescriptor{"bbb", "B"});
    for (int c = 0; c < 14; ++c) s.put(Concept{"k" + std::to_string(c), "g"});
    for (int c = 0; c < 10; ++c) {
        s.put(Sense{"", "aaa", "a" + std::to_string(c), "k" + std::to_string(c), "src"});
        s.put(Sense{"", "bbb", "b" + std::to_string(c), "k" + std::to_string(c), "src"});
    }
    // concepts only one side has, and a cognate edge across concepts, must not count
    for (int c = 10; c < 14; ++c) s.put(Sense{"", c % 2 ? "aaa" : "bbb", "x" + std::to_string(c), "k" + std::to_string(c), "src"});
    for (int c = 0; c < 4; ++c)
        s.put(CrossLingualRelation::canonical(make_sense_id("aaa", "k" + std::to_string(c), "a" + std::to_string(c)),
                                              make_sense_id("bbb", "k" + std::to_string(c), "b" + std::to_string(c)),
                                              "src"));
    s.put(CrossLingualRelation::canonical(make_sense_id("aaa", "k5", "a5"), make_sense_id("bbb", "k6", "b6"), "src"));

    auto oracle = support::enumerate_similarity(s, "aaa", "bbb");
    CHECK(oracle.overlap == 10);
    CHECK(oracle.cognate_overlap == 4);
    auto r = lexicon_similarity(s, "aaa", "bbb", 10);
    REQUIRE(r);
    CHECK(r->score == 0.4);
    CHECK_FALSE(lexicon_similarity(s, "aaa", "bbb", 11));
}

TEST_CASE("similarity matrix on F1") {
    Store s = fixtures::f1_store();
    auto m = similarity_matrix(s, 1);
    std::map<std::pair<std::string, std::string>, double> by_pair;
    for (const auto& r : m) by_pair[{r.lang_a, r.lang_b}] = r.score;
    CHECK(by_pair.at({"eng", "ita"}) == 1.0);
    CHECK(by_pair.at({"fin", "hun"}) == 1.0);
    CHECK_FALSE(by_pair.count({"hun", "kan"}));
    CHECK_FALSE(by_pair.count({"eng", "swa"}));
    CHECK(similarity_matrix(s, 5).empty());
}

TEST_CASE("similarity properties on 1000 random fixtures") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 1000; ++round) {
        Store s = support::random_store(rng);
        std::vector<std::string> codes;
        for (const auto& [code, lang] : s.languages()) codes.push_back(code);

        std::vector<SimilarityRecord> pairwise;
        for (std::size_t i = 0; i < codes.size(); ++i)
            for (std::size_t j = 0; j < codes.size(); ++j) {
                if (i == j) continue;
                auto ab = lexicon_similarity(s, codes[i], codes[j], 1);
                auto ba = lexicon_similarity(s, codes[j], codes[i], 1);
                CHECK(ab == ba);
                auto oracle = support::enumerate_similarity(s, codes[i], codes[j]);
                if (oracle.overlap == 0) {
                    CHECK_FALSE(ab);
                    continue;
                }
                REQUIRE(ab);
                CHECK(ab->overlap == oracle.overlap);
                CHECK(ab->cognate_overlap == oracle.cognate_overlap);
                CHECK(ab->score >= 0.0);
                CHECK(ab->score <= 1.0);
                if (i < j) pairwise.push_back(*ab);
            }
        CHECK(similarity_matrix(s, 1) == pairwise);
    }
}

TEST_CASE("adding cognate evidence never lowers the score, adding unlinked overlap never raises it") {
    std::mt19937_64 rng(4321);
    for (int round = 0; round < 300; ++round) {
        const Store base = support::random_store(rng);
        const auto initial = score(base, support::code(0), support::code(1));

        Store s = base;
        auto before = initial;
        for (const auto& x : s.senses_of_language(support::code(0)))
            for (const auto& y : s.senses_of_language(support::code(1)))
                if (s.find_sense(x)->concept_id == s.find_sense(y)->concept_id) {
                    s.put(CrossLingualRelation::canonical(x, y, "src"));
                    auto after = score(s, support::code(0), support::code(1));
                    REQUIRE(after);
                    CHECK(*after >= *before);
                    before = after;
                }

        Store t = base;
        t.put(Concept{"fresh", "g"});
        t.put(Sense{"", support::code(0), "f0", "fresh", "src"});
        t.put(Sense{"", support::code(1), "f1", "fresh", "src"});
        auto after = score(t, support::code(0), support::code(1));
        REQUIRE(after);
        if (initial) CHECK(*after <= *initial);
        else CHECK(*after == 0.0);
    }
}
