#include "lexdiv/model.hpp"

#include <doctest.h>

using namespace lexdiv;

TEST_CASE("normalize_lemma composes to NFC and trims Unicode whitespace") {
    // "e" + combining acute -> precomposed U+00E9
    CHECK(normalize_lemma("caf\x65\xcc\x81") == std::optional<std::string>("caf\xc3\xa9"));
    CHECK(normalize_lemma("  rice\t") == std::optional<std::string>("rice"));
    // U+00A0 no-break space and U+3000 ideographic space
    CHECK(normalize_lemma("\xc2\xa0pesce\xe3\x80\x80") == std::optional<std::string>("pesce"));
    CHECK(normalize_lemma("Rice") == std::optional<std::string>("Rice"));
    CHECK(normalize_lemma("two words") == std::optional<std::string>("two words"));
    CHECK(normalize_lemma("   ") == std::optional<std::string>(""));
}

TEST_CASE("normalize_lemma rejects invalid UTF-8") {
    CHECK_FALSE(normalize_lemma("\xff\xfe").has_value());
    CHECK_FALSE(normalize_lemma("ab\xc3").has_value());
    CHECK_FALSE(normalize_lemma("\xed\xa0\x80").has_value());  // encoded surrogate
}

TEST_CASE("normalize_lemma is idempotent") {
    for (const char* raw : {"caf\x65\xcc\x81", " x ", "\xe1\x84\x80\xe1\x85\xa1", "\xea\xb0\x80"}) {
        auto once = normalize_lemma(raw);
        REQUIRE(once);
        CHECK(normalize_lemma(*once) == once);
    }
}

TEST_CASE("language codes are three lowercase ASCII letters") {
    CHECK(is_language_code("eng"));
    CHECK_FALSE(is_language_code("en"));
    CHECK_FALSE(is_language_code("ENG"));
    CHECK_FALSE(is_language_code("e1g"));
    CHECK_FALSE(is_language_code("engl"));
}

TEST_CASE("token round trips") {
    for (auto pos : {PartOfSpeech::noun, PartOfSpeech::verb, PartOfSpeech::adjective, PartOfSpeech::adverb,
                     PartOfSpeech::other})
        CHECK(parse_pos(to_string(pos)) == pos);
    CHECK_FALSE(parse_pos("noun-ish"));

    for (auto kind : all_concept_relation_kinds()) CHECK(parse_concept_relation_kind(to_string(kind)) == kind);
    CHECK(all_concept_relation_kinds().size() == 4);
    CHECK_FALSE(parse_concept_relation_kind("hypernym"));

    CHECK(IntraKind::parse("derivation").tag == IntraKind::derivation);
    CHECK(IntraKind::parse("metonym-of").to_string() == "metonym-of");
    auto custom = IntraKind::parse("colexified-with");
    CHECK(custom.tag == IntraKind::other);
    CHECK(custom.to_string() == "colexified-with");

    CHECK(to_string(LexicalizationStatus::lexicalised) == "lexicalised");
    CHECK(to_string(LexicalizationStatus::gap) == "gap");
    CHECK(to_string(LexicalizationStatus::unknown) == "unknown");
}

TEST_CASE("cognate links are canonicalised") {
    auto a = CrossLingualRelation::canonical("ita:fish:pesce", "eng:fish:fish", "f1");
    auto b = CrossLingualRelation::canonical("eng:fish:fish", "ita:fish:pesce", "f1");
    CHECK(a == b);
    CHECK(a.source == "eng:fish:fish");
}

TEST_CASE("sense ids derive from the natural key") {
    CHECK(make_sense_id("eng", "rice-general", "rice") == "eng:rice-general:rice");
}

TEST_CASE("errors carry a stable code") {
    Error e(errc::unknown_concept, "no such concept");
    CHECK(e.code() == "unknown-concept");
    CHECK(std::string(e.what()) == "no such concept");
}
