#include "lexdiv/export.hpp"
#include "lexdiv/fixtures.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace lexdiv;
using namespace lexdiv::exports;

namespace {

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

std::vector<std::string> cells(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, '\t')) out.push_back(cell);
    if (!line.empty() && line.back() == '\t') out.emplace_back();
    return out;
}

// F1 + F2 plus intra-lingual relations and awkward lemmas.
Store rich_store() {
    Store s = fixtures::f1_f2_store();
    s.put(Concept{"fisher", "one who fishes", PartOfSpeech::noun, "10105733-n"});
    s.put(Concept{"to-fish", "catch fish", PartOfSpeech::verb, std::nullopt, false});
    s.put(ConceptRelation{"fisher", "fish", ConceptRelationKind::related});
    s.put(Sense{"", "eng", "fisher", "fisher", "f1"});
    s.put(Sense{"", "eng", "fish", "to-fish", "f1"});
    s.put(Sense{"", "eng", "R&D <\"fish\"> & 'co'", "fisher", "f1"});
    s.put(Sense{"", "ita", "pescatore", "fisher", "f1"});
    s.put(Sense{"", "ita", "pescare", "to-fish", "f1"});
    s.put(Sense{"", "hun", "hal\xc3\xa1sz", "fisher", "f1"});
    s.put(IntraLingualRelation{IntraKind::parse("derivation"), "eng:fisher:fisher", "eng:fish:fish", "f1"});
    s.put(IntraLingualRelation{IntraKind::parse("homograph-of"), "eng:to-fish:fish", "eng:fish:fish", "f1"});
    s.put(IntraLingualRelation{IntraKind::parse("agent-of"), "ita:fisher:pescatore", "ita:to-fish:pescare", "f1"});
    REQUIRE(s.validate().empty());
    return s;
}

template <typename Table, typename Pred>
Table filter(const Table& table, Pred keep) {
    Table out;
    for (const auto& entry : table)
        if (keep(entry)) out.insert(entry);
    return out;
}

struct LexiconView {
    std::map<std::string, Sense> senses;
    std::map<Store::LangConcept, LexicalGap> gaps;
    std::set<IntraLingualRelation> intra;
    std::set<ConceptRelation> concept_relations;

    bool operator==(const LexiconView&) const = default;
};

LexiconView view(const Store& s, const std::string& code) {
    LexiconView v;
    v.senses = filter(s.senses(), [&](const auto& e) { return e.second.language == code; });
    v.gaps = filter(s.gaps(), [&](const auto& e) { return e.first.first == code; });
    v.intra = filter(s.intra_relations(), [&](const auto& r) { return s.find_sense(r.source)->language == code; });
    std::set<std::string> used;
    for (const auto& [id, sense] : v.senses) used.insert(sense.concept_id);
    for (const auto& [key, gap] : v.gaps) used.insert(key.second);
    v.concept_relations = filter(s.concept_relations(),
                                 [&](const auto& r) { return used.count(r.source) && used.count(r.target); });
    return v;
}

Store reingest(const ingest::Batch& batch) {
    Store out;
    auto report = ingest::merge(batch, out);
    CHECK(report.rejected.empty());
    CHECK(report.conflicts.empty());
    return out;
}

}  // namespace

TEST_CASE("raw exports") {
    Store both = fixtures::f1_f2_store();
    std::ostringstream gaps;
    CHECK(export_raw(both, RawKind::gaps, gaps) == 68);
    CHECK(data_lines(gaps.str()).size() == 68);

    Store f1 = fixtures::f1_store();
    std::ostringstream cognates;
    CHECK(export_raw(f1, RawKind::cognates, cognates) == 3);

    SUBCASE("gaps and cognates are in the ingest formats") {
        std::istringstream g(gaps.str()), c(cognates.str());
        auto parsed_gaps = ingest::parse_gaps(g);
        auto parsed_cognates = ingest::parse_cognates(c);
        CHECK(parsed_gaps.records.size() == 68);
        CHECK(parsed_gaps.report.rejected.empty());
        CHECK(parsed_cognates.records.size() == 3);
        Store copy = f1;
        auto report = ingest::merge([&] {
            ingest::Batch b;
            b.add(std::move(parsed_cognates));
            return b;
        }(), copy);
        CHECK(report.accepted.at("cognates") == 3);
        CHECK(copy == f1);
    }
    SUBCASE("similarity and clusters") {
        std::ostringstream sim, clusters;
        CHECK(export_raw(f1, RawKind::similarity, sim, 1) == 6);
        auto rows = data_lines(sim.str());
        CHECK(std::find(rows.begin(), rows.end(), "eng\tita\t1\t2\t2") != rows.end());
        CHECK(export_raw(f1, RawKind::clusters, clusters) == 8);
        CHECK(std::count(rows.begin(), rows.end(), "hun\tkan\t0\t0\t0") == 0);
    }
    SUBCASE("all sources closed") {
        Store closed = f1;
        closed.put(Provenance{"f1", "proprietary", false});
        for (auto kind : {RawKind::gaps, RawKind::cognates, RawKind::similarity, RawKind::clusters}) {
            std::ostringstream out;
            CHECK(export_raw(closed, kind, out, 1) == 0);
        }
    }
    SUBCASE("write failure") {
        std::ostringstream broken;
        broken.setstate(std::ios::badbit);
        CHECK_THROWS_AS(export_raw(f1, RawKind::gaps, broken), Error);
    }
}

TEST_CASE("single-lexicon LMF") {
    Store f1 = fixtures::f1_store();
    std::ostringstream xml;
    auto summary = export_lexicon(f1, "eng", LexiconFormat::lmf_xml, xml);
    CHECK(summary.entries == 2);
    CHECK(summary.gaps == 1);
    std::string doc = xml.str();
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = doc.find(needle); pos != std::string::npos; pos = doc.find(needle, pos + 1)) ++n;
        return n;
    };
    CHECK(count("<LexicalEntry ") == 2);
    CHECK(count("<ld:Gap ") == 1);
    CHECK(count("<Lemma writtenForm=\"rice\"/>") == 1);
    CHECK(doc.find("xmlns:ld=\"urn:lexdiv:lmf-extension\"") != std::string::npos);
    // entries ordered by id
    CHECK(doc.find("eng:fish") < doc.find("eng:rice"));

    SUBCASE("language with no data") {
        f1.put(LanguageDescriptor{"zul", "Zulu", "Niger-Congo"});
        std::ostringstream empty;
        auto s = export_lexicon(f1, "zul", LexiconFormat::lmf_xml, empty);
        CHECK(s.entries == 0);
        std::istringstream in(empty.str());
        auto batch = parse_lmf(in);
        CHECK(batch.languages.size() == 1);
        CHECK(batch.senses.empty());
    }
    SUBCASE("unknown language") {
        std::ostringstream out;
        CHECK_THROWS_AS(export_lexicon(f1, "xxx", LexiconFormat::tsv, out), Error);
    }
    SUBCASE("malformed LMF") {
        std::istringstream in("<LexicalResource><Lexicon");
        CHECK_THROWS_AS(parse_lmf(in), Error);
    }
}

TEST_CASE("round trip through TSV and LMF for every language") {
    Store s = rich_store();
    for (const auto& [code, lang] : s.languages()) {
        CAPTURE(code);
        std::ostringstream tsv, xml;
        export_lexicon(s, code, LexiconFormat::tsv, tsv);
        export_lexicon(s, code, LexiconFormat::lmf_xml, xml);

        std::istringstream tsv_in(tsv.str()), xml_in(xml.str());
        Store from_tsv = reingest(ingest::parse_bundle(tsv_in));
        Store from_lmf = reingest(parse_lmf(xml_in));

        CHECK(view(from_tsv, code) == view(s, code));
        CHECK(from_tsv.languages().at(code) == lang);
        CHECK(from_lmf == from_tsv);

        // a second trip is byte-stable
        std::ostringstream again;
        export_lexicon(from_tsv, code, LexiconFormat::tsv, again);
        CHECK(again.str() == tsv.str());
    }
}

TEST_CASE("concept-aligned lexicon sets") {
    Store f1 = fixtures::f1_store();
    std::ostringstream out;
    CHECK(export_lexicon_set(f1, {"eng", "ita", "swa"}, out) == 3);
    auto rows = data_lines(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == "fish\tfish\tpesce\t");
    CHECK(rows[0] == "concept_id\teng\tita\tswa");
    CHECK(std::find(rows.begin(), rows.end(), "rice-general\trice\triso\tGAP") != rows.end());
    CHECK(std::find(rows.begin(), rows.end(), "raw-rice\tGAP\t\ts-raw") != rows.end());

    std::ostringstream hun_fin;
    CHECK(export_lexicon_set(f1, {"hun", "fin"}, hun_fin) == 1);
    CHECK(data_lines(hun_fin.str())[1] == "fish\thal\tkala");

    SUBCASE("synonyms are joined") {
        f1.put(Sense{"", "eng", "paddy", "rice-general", "f1"});
        std::ostringstream syn;
        export_lexicon_set(f1, {"eng", "ita"}, syn);
        CHECK(data_lines(syn.str())[3] == "rice-general\tpaddy|rice\triso");
    }
    SUBCASE("errors") {
        std::ostringstream sink;
        auto code = [&](std::vector<std::string> langs) {
            try {
                export_lexicon_set(f1, langs, sink);
            } catch (const Error& e) {
                return e.code();
            }
            return std::string("none");
        };
        CHECK(code({"eng"}) == errc::precondition);
        CHECK(code({"eng", "xxx"}) == errc::unknown_language);
        CHECK(code({"eng", "eng"}) == errc::invalid_argument);
    }
}

TEST_CASE("kinship domain in a lexicon set") {
    Store both = fixtures::f1_f2_store();
    std::ostringstream out;
    // 67 kinship rows plus fish, rice-general and the raw-rice gap from F1
    CHECK(export_lexicon_set(both, {"eng", "dra"}, out) == 70);
    auto rows = data_lines(out.str());
    std::set<std::string> domain;
    for (const auto& node : both.domain_tree("cousin", "eng").nodes) domain.insert(node.concept_id);
    REQUIRE(domain.size() == 67);
    std::size_t gaps = 0, words = 0, dra_words = 0, dra_unknown = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto c = cells(rows[i]);
        REQUIRE(c.size() == 3);
        if (!domain.count(c[0])) continue;
        (c[1] == "GAP" ? gaps : words) += 1;
        (c[2].empty() ? dra_unknown : dra_words) += 1;
    }
    CHECK(gaps == 66);
    CHECK(words == 1);
    CHECK(dra_words == 16);
    CHECK(dra_unknown == 51);
}

TEST_CASE("row completeness on random stores") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 100; ++round) {
        Store s = support::random_store(rng);
        std::vector<std::string> langs{support::code(0), support::code(1)};
        std::size_t expected = 0;
        for (const auto& [id, c] : s.concepts())
            if (s.status(langs[0], id) != LexicalizationStatus::unknown ||
                s.status(langs[1], id) != LexicalizationStatus::unknown)
                ++expected;
        std::ostringstream out;
        CHECK(export_lexicon_set(s, langs, out) == expected);
    }
}

TEST_CASE("license filter removes every closed record") {
    Store s = rich_store();
    s.put(Provenance{"closed", "proprietary", false});
    s.put(Concept{"secret", "closed concept"});
    s.put(Sense{"", "eng", "hush", "secret", "closed"});
    s.put(Sense{"", "ita", "zitto", "secret", "closed"});
    s.put(LexicalGap{"kan", "fish", "closed"});
    s.put(LexicalGap{"swa", "secret", "closed"});
    s.put(CrossLingualRelation::canonical("eng:secret:hush", "ita:secret:zitto", "closed"));
    s.put(CrossLingualRelation::canonical("eng:fisher:fisher", "ita:fisher:pescatore", "closed"));
    s.put(IntraLingualRelation{IntraKind::parse("antonym"), "eng:fish:fish", "eng:rice-general:rice", "closed"});

    std::string everything;
    for (auto kind : {RawKind::gaps, RawKind::cognates, RawKind::similarity, RawKind::clusters}) {
        std::ostringstream out;
        export_raw(s, kind, out, 1);
        everything += out.str();
    }
    for (const auto& [code, lang] : s.languages()) {
        std::ostringstream tsv, xml;
        export_lexicon(s, code, LexiconFormat::tsv, tsv);
        export_lexicon(s, code, LexiconFormat::lmf_xml, xml);
        everything += tsv.str() + xml.str();
    }
    std::ostringstream set;
    export_lexicon_set(s, {"eng", "ita", "kan", "swa"}, set);
    everything += set.str();

    for (const char* needle : {"closed", "hush", "zitto", "antonym"}) {
        CAPTURE(needle);
        CHECK(everything.find(needle) == std::string::npos);
    }
    // every exported line that names a source names an open one
    std::istringstream in(everything);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.find("\tf1") != std::string::npos || line.find("\tf2") != std::string::npos) ++lines;
    }
    CHECK(lines > 0);
}
