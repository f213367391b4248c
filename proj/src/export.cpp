#include "lexdiv/export.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

namespace lexdiv::exports {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void write_or_throw(std::ostream& sink) {
    if (!sink) throw Error(errc::io, "write failure on export sink");
}

// The slice of a (license-filtered) store that belongs to one lexicon.
struct LexiconSlice {
    LanguageDescriptor language;
    std::vector<const Sense*> senses;  // sorted by (lemma, concept)
    std::vector<const LexicalGap*> gaps;
    std::vector<const IntraLingualRelation*> relations;
    std::vector<const Concept*> concepts;
    std::vector<const ConceptRelation*> concept_relations;
    std::vector<const Provenance*> sources;
};

LexiconSlice slice(const Store& store, const std::string& code) {
    const LanguageDescriptor* lang = store.find_language(code);
    if (!lang) throw Error(errc::unknown_language, "unknown language '" + code + "'");
    LexiconSlice s;
    s.language = *lang;

    std::set<std::string> concept_ids;
    std::set<std::string> source_ids;
    for (const auto& id : store.senses_of_language(code)) {
        const Sense* sense = store.find_sense(id);
        s.senses.push_back(sense);
        concept_ids.insert(sense->concept_id);
        source_ids.insert(sense->source);
    }
    std::sort(s.senses.begin(), s.senses.end(), [](const Sense* a, const Sense* b) {
        return std::tie(a->lemma, a->concept_id) < std::tie(b->lemma, b->concept_id);
    });
    for (const auto& [key, gap] : store.gaps()) {
        if (key.first != code) continue;
        s.gaps.push_back(&gap);
        concept_ids.insert(gap.concept_id);
        source_ids.insert(gap.source);
    }
    for (const auto& rel : store.intra_relations()) {
        const Sense* from = store.find_sense(rel.source);
        if (!from || from->language != code) continue;
        s.relations.push_back(&rel);
        source_ids.insert(rel.provenance);
    }
    for (const auto& id : concept_ids)
        if (const Concept* c = store.find_concept(id)) s.concepts.push_back(c);
    for (const auto& rel : store.concept_relations())
        if (concept_ids.count(rel.source) && concept_ids.count(rel.target)) s.concept_relations.push_back(&rel);
    for (const auto& id : source_ids)
        if (const Provenance* p = store.find_source(id)) s.sources.push_back(p);
    return s;
}

std::string tsv_language(const LanguageDescriptor& l) {
    std::string line = l.code + "\t" + l.name + "\t" + l.phylum.value_or("");
    if (l.latitude && l.longitude) line += "\t" + format_double(*l.latitude) + "\t" + format_double(*l.longitude);
    return line;
}

std::string tsv_concept(const Concept& c) {
    return c.id + "\t" + std::string(to_string(c.pos)) + "\t" + c.gloss + "\t" + c.pwn30_id.value_or("") + "\t\t" +
           (c.interlingual ? "1" : "0");
}

void write_tsv_lexicon(const Store& store, const LexiconSlice& s, std::ostream& out) {
    out << "#@ sources\n";
    for (const auto* p : s.sources) out << p->source_id << '\t' << p->license << '\t' << (p->redistributable ? 1 : 0) << '\n';
    out << "#@ languages\n" << tsv_language(s.language) << '\n';
    out << "#@ concepts\n";
    for (const auto* c : s.concepts) out << tsv_concept(*c) << '\n';
    out << "#@ concept_relations\n";
    for (const auto* r : s.concept_relations) out << r->source << '\t' << to_string(r->kind) << '\t' << r->target << '\n';
    out << "#@ senses\n";
    for (const auto* sense : s.senses)
        out << sense->language << '\t' << sense->lemma << '\t' << sense->concept_id << '\t' << sense->source << '\n';
    out << "#@ gaps\n";
    for (const auto* g : s.gaps) out << g->language << '\t' << g->concept_id << '\t' << g->source << '\n';
    out << "#@ intra_relations\n";
    for (const auto* r : s.relations) {
        const Sense* a = store.find_sense(r->source);
        const Sense* b = store.find_sense(r->target);
        out << a->language << '\t' << a->lemma << '\t' << a->concept_id << '\t' << r->kind.to_string() << '\t' << b->lemma
            << '\t' << b->concept_id << '\t' << r->provenance << '\n';
    }
}

void write_lmf_lexicon(const LexiconSlice& s, std::ostream& out) {
    const auto& l = s.language;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<LexicalResource xmlns:ld=\"" << kLmfExtensionNamespace << "\">\n";
    out << "  <Lexicon id=\"" << xml_escape(l.code) << "\" language=\"" << xml_escape(l.code) << "\" label=\""
        << xml_escape(l.name) << "\"";
    if (l.phylum) out << " ld:phylum=\"" << xml_escape(*l.phylum) << "\"";
    if (l.latitude && l.longitude)
        out << " ld:latitude=\"" << format_double(*l.latitude) << "\" ld:longitude=\"" << format_double(*l.longitude)
            << "\"";
    out << ">\n";

    for (const auto* p : s.sources)
        out << "    <ld:Source id=\"" << xml_escape(p->source_id) << "\" license=\"" << xml_escape(p->license)
            << "\" redistributable=\"" << (p->redistributable ? 1 : 0) << "\"/>\n";

    std::map<std::string, std::vector<const IntraLingualRelation*>> relations_of;
    for (const auto* r : s.relations) relations_of[r->source].push_back(r);

    // Senses are sorted by lemma, so entries come out ordered by id.
    for (std::size_t i = 0; i < s.senses.size();) {
        const std::string& lemma = s.senses[i]->lemma;
        out << "    <LexicalEntry id=\"" << xml_escape(l.code + ":" + lemma) << "\">\n";
        out << "      <Lemma writtenForm=\"" << xml_escape(lemma) << "\"/>\n";
        for (; i < s.senses.size() && s.senses[i]->lemma == lemma; ++i) {
            const Sense* sense = s.senses[i];
            out << "      <Sense id=\"" << xml_escape(sense->id) << "\" conceptRef=\"" << xml_escape(sense->concept_id)
                << "\" ld:source=\"" << xml_escape(sense->source) << "\"";
            auto rels = relations_of.find(sense->id);
            if (rels == relations_of.end()) {
                out << "/>\n";
                continue;
            }
            out << ">\n";
            for (const auto* r : rels->second)
                out << "        <SenseRelation relType=\"" << xml_escape(r->kind.to_string()) << "\" target=\""
                    << xml_escape(r->target) << "\" ld:source=\"" << xml_escape(r->provenance) << "\"/>\n";
            out << "      </Sense>\n";
        }
        out << "    </LexicalEntry>\n";
    }

    out << "    <ld:GapList>\n";
    for (const auto* g : s.gaps)
        out << "      <ld:Gap conceptRef=\"" << xml_escape(g->concept_id) << "\" ld:source=\"" << xml_escape(g->source)
            << "\"/>\n";
    out << "    </ld:GapList>\n";

    out << "    <ld:ConceptList>\n";
    for (const auto* c : s.concepts) {
        out << "      <ld:Concept id=\"" << xml_escape(c->id) << "\" partOfSpeech=\"" << to_string(c->pos)
            << "\" gloss=\"" << xml_escape(c->gloss) << "\"";
        if (c->pwn30_id) out << " pwn30=\"" << xml_escape(*c->pwn30_id) << "\"";
        out << " interlingual=\"" << (c->interlingual ? 1 : 0) << "\"/>\n";
    }
    for (const auto* r : s.concept_relations)
        out << "      <ld:ConceptRelation source=\"" << xml_escape(r->source) << "\" relType=\""
            << to_string(r->kind) << "\" target=\"" << xml_escape(r->target) << "\"/>\n";
    out << "    </ld:ConceptList>\n";

    out << "  </Lexicon>\n";
    out << "</LexicalResource>\n";
}

}  // namespace

std::optional<RawKind> parse_raw_kind(std::string_view token) {
    if (token == "gaps") return RawKind::gaps;
    if (token == "cognates") return RawKind::cognates;
    if (token == "similarity") return RawKind::similarity;
    if (token == "clusters") return RawKind::clusters;
    return std::nullopt;
}

std::optional<LexiconFormat> parse_lexicon_format(std::string_view token) {
    if (token == "lmf" || token == "lmf-xml") return LexiconFormat::lmf_xml;
    if (token == "tsv") return LexiconFormat::tsv;
    return std::nullopt;
}

std::size_t export_raw(const Store& store, RawKind kind, std::ostream& sink, std::size_t min_overlap) {
    const Store filtered = store.redistributable_subset();
    std::size_t rows = 0;
    switch (kind) {
        case RawKind::gaps:
            sink << "# language\tconcept\tsource_id\n";
            for (const auto& [key, gap] : filtered.gaps()) {
                sink << gap.language << '\t' << gap.concept_id << '\t' << gap.source << '\n';
                ++rows;
            }
            break;
        case RawKind::cognates:
            sink << "# lang1\tlemma1\tconcept1\tlang2\tlemma2\tconcept2\tsource_id\n";
            for (const auto& rel : filtered.cognates()) {
                const Sense* a = filtered.find_sense(rel.source);
                const Sense* b = filtered.find_sense(rel.target);
                sink << a->language << '\t' << a->lemma << '\t' << a->concept_id << '\t' << b->language << '\t'
                     << b->lemma << '\t' << b->concept_id << '\t' << rel.provenance << '\n';
                ++rows;
            }
            break;
        case RawKind::similarity:
            sink << "# score = cognate_overlap / overlap over concepts lexicalised in both languages\n";
            sink << "# min_overlap = " << min_overlap << "\n";
            sink << "# lang_a\tlang_b\tscore\toverlap\tcognate_overlap\n";
            for (const auto& r : analytics::similarity_matrix(filtered, min_overlap)) {
                sink << r.lang_a << '\t' << r.lang_b << '\t' << format_double(r.score) << '\t' << r.overlap << '\t'
                     << r.cognate_overlap << '\n';
                ++rows;
            }
            break;
        case RawKind::clusters:
            sink << "# concept\tcluster\tlanguage\tlemma\n";
            for (const auto& [id, record] : filtered.concepts()) {
                auto clustering = analytics::cognate_clusters(filtered, id);
                for (std::size_t c = 0; c < clustering.clusters.size(); ++c)
                    for (const auto& sense_id : clustering.clusters[c]) {
                        const Sense* s = filtered.find_sense(sense_id);
                        sink << id << '\t' << c << '\t' << s->language << '\t' << s->lemma << '\n';
                        ++rows;
                    }
            }
            break;
    }
    write_or_throw(sink);
    return rows;
}

LexiconSummary export_lexicon(const Store& store, const std::string& language, LexiconFormat format,
                              std::ostream& sink) {
    if (!store.find_language(language)) throw Error(errc::unknown_language, "unknown language '" + language + "'");
    const Store filtered = store.redistributable_subset();
    LexiconSlice s = slice(filtered, language);
    if (format == LexiconFormat::tsv) write_tsv_lexicon(filtered, s, sink);
    else write_lmf_lexicon(s, sink);
    write_or_throw(sink);

    LexiconSummary summary;
    std::set<std::string> lemmas;
    for (const auto* sense : s.senses) lemmas.insert(sense->lemma);
    summary.entries = lemmas.size();
    summary.senses = s.senses.size();
    summary.gaps = s.gaps.size();
    summary.relations = s.relations.size();
    return summary;
}

std::size_t export_lexicon_set(const Store& store, const std::vector<std::string>& languages, std::ostream& sink) {
    if (languages.size() < 2) throw Error(errc::precondition, "a lexicon set needs at least two languages");
    std::set<std::string> unique;
    for (const auto& code : languages) {
        if (!store.find_language(code)) throw Error(errc::unknown_language, "unknown language '" + code + "'");
        if (!unique.insert(code).second) throw Error(errc::invalid_argument, "language '" + code + "' listed twice");
    }
    const Store filtered = store.redistributable_subset();

    sink << "concept_id";
    for (const auto& code : languages) sink << '\t' << code;
    sink << '\n';

    std::size_t rows = 0;
    for (const auto& [id, record] : filtered.concepts()) {
        std::vector<std::string> cells;
        bool any = false;
        for (const auto& code : languages) {
            switch (filtered.status(code, id)) {
                case LexicalizationStatus::lexicalised: {
                    std::string cell;
                    for (const auto& lemma : filtered.lemmas_of(code, id)) {
                        if (!cell.empty()) cell += '|';
                        cell += lemma;
                    }
                    cells.push_back(std::move(cell));
                    any = true;
                    break;
                }
                case LexicalizationStatus::gap:
                    cells.emplace_back("GAP");
                    any = true;
                    break;
                case LexicalizationStatus::unknown: cells.emplace_back(); break;
            }
        }
        if (!any) continue;
        sink << id;
        for (const auto& cell : cells) sink << '\t' << cell;
        sink << '\n';
        ++rows;
    }
    write_or_throw(sink);
    return rows;
}

ingest::Batch parse_lmf(std::istream& in, const std::string& file) {
    namespace pt = boost::property_tree;
    if (!in) throw Error(errc::io, "unreadable input stream");
    pt::ptree doc;
    try {
        pt::read_xml(in, doc);
    } catch (const pt::xml_parser_error& e) {
        throw Error(errc::invalid_argument, std::string("malformed LMF document: ") + e.what());
    }

    ingest::Batch batch;
    std::size_t element = 0;
    auto where = [&](const std::string& what) { return ingest::LineRef{file, ++element, what}; };
    auto attr = [](const pt::ptree& node, const std::string& name) {
        return node.get<std::string>("<xmlattr>." + name, "");
    };
    auto opt_attr = [](const pt::ptree& node, const std::string& name) -> std::optional<std::string> {
        if (auto v = node.get_optional<std::string>("<xmlattr>." + name)) return *v;
        return std::nullopt;
    };

    const pt::ptree* lexicon = nullptr;
    if (auto res = doc.get_child_optional("LexicalResource"))
        if (auto lex = res->get_child_optional("Lexicon")) lexicon = &*lex;
    if (!lexicon) throw Error(errc::invalid_argument, "LMF document has no LexicalResource/Lexicon");

    LanguageDescriptor lang;
    lang.code = attr(*lexicon, "id");
    lang.name = attr(*lexicon, "label");
    lang.phylum = opt_attr(*lexicon, "ld:phylum");
    if (auto lat = opt_attr(*lexicon, "ld:latitude")) lang.latitude = std::stod(*lat);
    if (auto lon = opt_attr(*lexicon, "ld:longitude")) lang.longitude = std::stod(*lon);
    batch.languages.push_back({lang, where("Lexicon " + lang.code)});

    std::map<std::string, ingest::SenseKey> sense_keys;
    std::vector<std::pair<std::string, const pt::ptree*>> sense_relations;

    for (const auto& [tag, node] : *lexicon) {
        if (tag == "ld:Source") {
            batch.sources.push_back({Provenance{attr(node, "id"), attr(node, "license"),
                                                attr(node, "redistributable") == "1"},
                                     where("Source " + attr(node, "id"))});
        } else if (tag == "LexicalEntry") {
            std::string lemma = node.get<std::string>("Lemma.<xmlattr>.writtenForm", "");
            for (const auto& [child_tag, child] : node) {
                if (child_tag != "Sense") continue;
                std::string concept_id = attr(child, "conceptRef");
                std::string id = attr(child, "id");
                Sense sense{make_sense_id(lang.code, concept_id, lemma), lang.code, lemma, concept_id,
                            attr(child, "ld:source")};
                sense_keys[id] = {lang.code, lemma, concept_id};
                batch.senses.push_back({std::move(sense), where("Sense " + id)});
                for (const auto& [rel_tag, rel] : child)
                    if (rel_tag == "SenseRelation") sense_relations.emplace_back(id, &rel);
            }
        } else if (tag == "ld:GapList") {
            for (const auto& [gap_tag, gap] : node)
                if (gap_tag == "ld:Gap")
                    batch.gaps.push_back({LexicalGap{lang.code, attr(gap, "conceptRef"), attr(gap, "ld:source")},
                                          where("Gap " + attr(gap, "conceptRef"))});
        } else if (tag == "ld:ConceptList") {
            for (const auto& [c_tag, c] : node) {
                if (c_tag == "ld:Concept") {
                    Concept record;
                    record.id = attr(c, "id");
                    record.pos = parse_pos(attr(c, "partOfSpeech")).value_or(PartOfSpeech::other);
                    record.gloss = attr(c, "gloss");
                    record.pwn30_id = opt_attr(c, "pwn30");
                    record.interlingual = attr(c, "interlingual") != "0";
                    batch.concepts.push_back({std::move(record), where("Concept " + attr(c, "id"))});
                } else if (c_tag == "ld:ConceptRelation") {
                    auto kind = parse_concept_relation_kind(attr(c, "relType"));
                    auto ref = where("ConceptRelation " + attr(c, "source") + " " + attr(c, "target"));
                    if (!kind) {
                        batch.report.rejected.push_back({ref, "kind", "unknown concept relation kind"});
                        continue;
                    }
                    batch.concept_relations.push_back({ConceptRelation{attr(c, "source"), attr(c, "target"), *kind}, ref});
                }
            }
        }
    }

    for (const auto& [source_id, rel] : sense_relations) {
        std::string target = attr(*rel, "target");
        auto ref = where("SenseRelation " + source_id + " " + target);
        auto from = sense_keys.find(source_id);
        auto to = sense_keys.find(target);
        if (to == sense_keys.end()) {
            batch.report.rejected.push_back({ref, "dangling-sense", "relation target not in this lexicon"});
            continue;
        }
        batch.intra_relations.push_back(
            {ingest::IntraRecord{from->second, IntraKind::parse(attr(*rel, "relType")), to->second,
                                 attr(*rel, "ld:source")},
             ref});
    }
    return batch;
}

}  // namespace lexdiv::exports
