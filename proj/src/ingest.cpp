#include "lexdiv/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace lexdiv::ingest {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

using Lines = std::vector<Line>;

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

Lines read_lines(std::istream& in) {
    if (!in) throw Error(errc::io, "unreadable input stream");
    Lines lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (is_blank(text) || text.front() == '#') continue;
        lines.push_back({number, std::move(text)});
    }
    if (in.bad()) throw Error(errc::io, "error while reading input stream");
    return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return cols;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool is_identifier(std::string_view id) {
    if (id.empty()) return false;
    for (unsigned char c : id)
        if (std::isspace(c) || c == ':') return false;
    return true;
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Shared per-line bookkeeping for one parser run.
class LineParser {
public:
    LineParser(std::string file, IngestReport& report) : file_(std::move(file)), report_(report) {}

    LineRef ref(const Line& line) const { return {file_, line.number, line.text}; }

    void reject(const Line& line, std::string rule, std::string detail = {}) {
        report_.rejected.push_back({ref(line), std::move(rule), std::move(detail)});
    }

    void conflict(const Line& line, std::string record, std::string resolution) {
        report_.conflicts.push_back({ref(line), std::move(record), std::move(resolution)});
    }

    // Splits and validates the column count and encoding; nullopt if rejected.
    std::optional<std::vector<std::string>> columns(const Line& line, std::size_t min, std::size_t max) {
        if (!normalize_lemma(line.text)) {
            reject(line, "encoding", "line is not valid UTF-8");
            return std::nullopt;
        }
        auto cols = split_tabs(line.text);
        if (cols.size() < min || cols.size() > max) {
            reject(line, "columns",
                   "expected " + std::to_string(min) + (min == max ? "" : "-" + std::to_string(max)) +
                       " columns, got " + std::to_string(cols.size()));
            return std::nullopt;
        }
        for (auto& c : cols) c = trim(c);
        return cols;
    }

private:
    std::string file_;
    IngestReport& report_;
};

std::optional<SenseKey> sense_key(LineParser& p, const Line& line, const std::string& language,
                                  const std::string& lemma, const std::string& concept_id) {
    if (!is_language_code(language)) {
        p.reject(line, "language-code", "'" + language + "' is not a three-letter lowercase code");
        return std::nullopt;
    }
    auto normalized = normalize_lemma(lemma);
    if (!normalized || normalized->empty()) {
        p.reject(line, "empty-lemma", "lemma is empty after trimming");
        return std::nullopt;
    }
    if (!is_identifier(concept_id)) {
        p.reject(line, "concept-id", "'" + concept_id + "' is not a valid concept id");
        return std::nullopt;
    }
    return SenseKey{language, *normalized, concept_id};
}

Parsed<Provenance> parse_sources_lines(const Lines& lines, const std::string& file) {
    Parsed<Provenance> out;
    LineParser p(file, out.report);
    for (const auto& line : lines) {
        auto cols = p.columns(line, 3, 3);
        if (!cols) continue;
        const auto& c = *cols;
        if (c[0].empty()) {
            p.reject(line, "source-id", "empty source id");
            continue;
        }
        if (c[2] != "0" && c[2] != "1") {
            p.reject(line, "redistributable", "expected 0 or 1");
            continue;
        }
        out.records.push_back({Provenance{c[0], c[1], c[2] == "1"}, p.ref(line)});
    }
    return out;
}

Parsed<LanguageDescriptor> parse_languages_lines(const Lines& lines, const std::string& file) {
    Parsed<LanguageDescriptor> out;
    LineParser p(file, out.report);
    for (const auto& line : lines) {
        auto cols = p.columns(line, 3, 5);
        if (!cols) continue;
        auto& c = *cols;
        c.resize(5);
        if (!is_language_code(c[0])) {
            p.reject(line, "language-code", "'" + c[0] + "' is not a three-letter lowercase code");
            continue;
        }
        LanguageDescriptor lang{c[0], c[1], std::nullopt, std::nullopt, std::nullopt};
        if (!c[2].empty()) lang.phylum = c[2];
        if (c[3].empty() != c[4].empty()) {
            p.reject(line, "coordinates", "latitude and longitude must be both present or absent");
            continue;
        }
        if (!c[3].empty()) {
            auto lat = parse_double(c[3]);
            auto lon = parse_double(c[4]);
            if (!lat || !lon || *lat < -90 || *lat > 90 || *lon < -180 || *lon > 180) {
                p.reject(line, "coordinates", "coordinates malformed or out of range");
                continue;
            }
            lang.latitude = lat;
            lang.longitude = lon;
        }
        out.records.push_back({std::move(lang), p.ref(line)});
    }
    return out;
}

ParsedConcepts parse_concepts_lines(const Lines& lines, const std::string& file) {
    ParsedConcepts out;
    LineParser p(file, out.report);
    for (const auto& line : lines) {
        auto cols = p.columns(line, 3, 6);
        if (!cols) continue;
        auto& c = *cols;
        c.resize(6);
        if (!is_identifier(c[0])) {
            p.reject(line, "concept-id", "'" + c[0] + "' is not a valid concept id");
            continue;
        }
        auto pos = parse_pos(c[1]);
        if (!pos) {
            p.reject(line, "pos", "unknown part of speech '" + c[1] + "'");
            continue;
        }
        if (!c[5].empty() && c[5] != "0" && c[5] != "1") {
            p.reject(line, "interlingual", "expected 0 or 1");
            continue;
        }
        std::vector<std::string> broader;
        bool bad_parent = false;
        for (std::stringstream ss(c[4]); ss.good();) {
            std::string parent;
            std::getline(ss, parent, ',');
            parent = trim(parent);
            if (parent.empty()) continue;
            if (!is_identifier(parent) || parent == c[0]) bad_parent = true;
            broader.push_back(parent);
        }
        if (bad_parent) {
            p.reject(line, "broader", "invalid or self-referencing broader concept");
            continue;
        }
        Concept record{c[0], c[2], *pos, std::nullopt, c[5] != "0"};
        if (!c[3].empty()) record.pwn30_id = c[3];
        LineRef where = p.ref(line);
        for (const auto& parent : broader)
            out.relations.push_back({ConceptRelation{c[0], parent, ConceptRelationKind::is_a}, where, true});
        out.concepts.push_back({std::move(record), std::move(where)});
    }
    return out;
}

Parsed<ConceptRelation> parse_concept_relations_lines(const Lines& lines, const std::string& file) {
    Parsed<ConceptRelation> out;
    LineParser p(file, out.report);
    std::set<ConceptRelation> seen;
    for (const auto& line : lines) {
        auto cols = p.columns(line, 3, 3);
        if (!cols) continue;
        const auto& c = *cols;
        if (!is_identifier(c[0]) || !is_identifier(c[2])) {
            p.reject(line, "concept-id", "invalid concept id");
            continue;
        }
        auto kind = parse_concept_relation_kind(c[1]);
        if (!kind) {
            p.reject(line, "kind", "unknown concept relation kind '" + c[1] + "'");
            continue;
        }
        if (c[0] == c[2]) {
            p.reject(line, "self-loop", "relation from a concept to itself");
            continue;
        }
        ConceptRelation rel{c[0], c[2], *kind};
        if (!seen.insert(rel).second) {
            p.conflict(line, line.text, "duplicate relation collapsed");
            continue;
        }
        out.records.push_back({std::move(rel), p.ref(line)});
    }
    return out;
}

Parsed<Sense> parse_senses_lines(const Lines& lines, const std::string& file) {
    Parsed<Sense> out;
    LineParser p(file, out.report);
    std::set<SenseKey> seen;
    for (const auto& line : lines) {
        auto cols = p.columns(line, 4, 4);
        if (!cols) continue;
        const auto& c = *cols;
        auto key = sense_key(p, line, c[0], c[1], c[2]);
        if (!key) continue;
        if (c[3].empty()) {
            p.reject(line, "source-id", "empty source id");
            continue;
        }
        if (!seen.insert(*key).second) {
            p.conflict(line, make_sense_id(key->language, key->concept_id, key->lemma), "duplicate sense collapsed");
            continue;
        }
        Sense sense{make_sense_id(key->language, key->concept_id, key->lemma), key->language, key->lemma,
                    key->concept_id, c[3]};
        out.records.push_back({std::move(sense), p.ref(line)});
    }
    return out;
}

Parsed<LexicalGap> parse_gaps_lines(const Lines& lines, const std::string& file) {
    Parsed<LexicalGap> out;
    LineParser p(file, out.report);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& line : lines) {
        auto cols = p.columns(line, 3, 3);
        if (!cols) continue;
        const auto& c = *cols;
        if (!is_language_code(c[0])) {
            p.reject(line, "language-code", "'" + c[0] + "' is not a three-letter lowercase code");
            continue;
        }
        if (!is_identifier(c[1])) {
            p.reject(line, "concept-id", "'" + c[1] + "' is not a valid concept id");
            continue;
        }
        if (c[2].empty()) {
            p.reject(line, "source-id", "empty source id");
            continue;
        }
        if (!seen.insert({c[0], c[1]}).second) {
            p.conflict(line, "gap " + c[0] + "/" + c[1], "duplicate gap collapsed");
            continue;
        }
        out.records.push_back({LexicalGap{c[0], c[1], c[2]}, p.ref(line)});
    }
    return out;
}

Parsed<CognateRecord> parse_cognates_lines(const Lines& lines, const std::string& file) {
    Parsed<CognateRecord> out;
    LineParser p(file, out.report);
    std::set<std::pair<SenseKey, SenseKey>> seen;
    for (const auto& line : lines) {
        auto cols = p.columns(line, 7, 7);
        if (!cols) continue;
        const auto& c = *cols;
        auto a = sense_key(p, line, c[0], c[1], c[2]);
        if (!a) continue;
        auto b = sense_key(p, line, c[3], c[4], c[5]);
        if (!b) continue;
        if (a->language == b->language) {
            p.reject(line, "same-language", "cognates must join different languages");
            continue;
        }
        if (c[6].empty()) {
            p.reject(line, "source-id", "empty source id");
            continue;
        }
        if (*b < *a) std::swap(*a, *b);
        if (!seen.insert({*a, *b}).second) {
            p.conflict(line, line.text, "duplicate cognate pair collapsed");
            continue;
        }
        out.records.push_back({CognateRecord{*a, *b, c[6]}, p.ref(line)});
    }
    return out;
}

Parsed<IntraRecord> parse_intra_lines(const Lines& lines, const std::string& file) {
    Parsed<IntraRecord> out;
    LineParser p(file, out.report);
    for (const auto& line : lines) {
        auto cols = p.columns(line, 7, 7);
        if (!cols) continue;
        const auto& c = *cols;
        auto from = sense_key(p, line, c[0], c[1], c[2]);
        if (!from) continue;
        auto to = sense_key(p, line, c[0], c[4], c[5]);
        if (!to) continue;
        if (c[3].empty()) {
            p.reject(line, "kind", "empty relation kind");
            continue;
        }
        if (*from == *to) {
            p.reject(line, "self-loop", "relation from a sense to itself");
            continue;
        }
        if (c[6].empty()) {
            p.reject(line, "source-id", "empty source id");
            continue;
        }
        out.records.push_back({IntraRecord{*from, IntraKind::parse(c[3]), *to, c[6]}, p.ref(line)});
    }
    return out;
}

template <typename T>
void move_into(std::vector<Located<T>>& dst, std::vector<Located<T>>& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

// Is `to` reachable from `from` following is-a edges upwards (child -> parent)?
bool is_a_reachable(const std::map<std::string, std::vector<std::string>>& parents,
                    const std::string& from, const std::string& to) {
    std::vector<std::string> stack{from};
    std::set<std::string> seen{from};
    while (!stack.empty()) {
        std::string node = stack.back();
        stack.pop_back();
        if (node == to) return true;
        auto it = parents.find(node);
        if (it == parents.end()) continue;
        for (const auto& p : it->second)
            if (seen.insert(p).second) stack.push_back(p);
    }
    return false;
}

}  // namespace

// --- report -----------------------------------------------------------------

void IngestReport::append(const IngestReport& other) {
    for (const auto& [kind, n] : other.accepted) accepted[kind] += n;
    accepted_lines += other.accepted_lines;
    rejected.insert(rejected.end(), other.rejected.begin(), other.rejected.end());
    conflicts.insert(conflicts.end(), other.conflicts.begin(), other.conflicts.end());
}

std::size_t IngestReport::accepted_total() const {
    std::size_t n = 0;
    for (const auto& [kind, count] : accepted) n += count;
    return n;
}

std::size_t IngestReport::accounted_lines() const {
    auto counted_r = std::count_if(rejected.begin(), rejected.end(), [](const Rejection& r) { return r.line_outcome; });
    auto counted_c = std::count_if(conflicts.begin(), conflicts.end(), [](const Conflict& c) { return c.line_outcome; });
    return accepted_lines + static_cast<std::size_t>(counted_r) + static_cast<std::size_t>(counted_c);
}

// --- parsers ----------------------------------------------------------------

Parsed<Provenance> parse_sources(std::istream& in, const std::string& file) {
    return parse_sources_lines(read_lines(in), file);
}
Parsed<LanguageDescriptor> parse_languages(std::istream& in, const std::string& file) {
    return parse_languages_lines(read_lines(in), file);
}
ParsedConcepts parse_concepts(std::istream& in, const std::string& file) {
    return parse_concepts_lines(read_lines(in), file);
}
Parsed<ConceptRelation> parse_concept_relations(std::istream& in, const std::string& file) {
    return parse_concept_relations_lines(read_lines(in), file);
}
Parsed<Sense> parse_senses(std::istream& in, const std::string& file) {
    return parse_senses_lines(read_lines(in), file);
}
Parsed<LexicalGap> parse_gaps(std::istream& in, const std::string& file) {
    return parse_gaps_lines(read_lines(in), file);
}
Parsed<CognateRecord> parse_cognates(std::istream& in, const std::string& file) {
    return parse_cognates_lines(read_lines(in), file);
}
Parsed<IntraRecord> parse_intra_relations(std::istream& in, const std::string& file) {
    return parse_intra_lines(read_lines(in), file);
}

// --- batch ------------------------------------------------------------------

void Batch::add(Parsed<Provenance> p) {
    move_into(sources, p.records);
    report.append(p.report);
}
void Batch::add(Parsed<LanguageDescriptor> p) {
    move_into(languages, p.records);
    report.append(p.report);
}
void Batch::add(ParsedConcepts p) {
    move_into(concepts, p.concepts);
    move_into(concept_relations, p.relations);
    report.append(p.report);
}
void Batch::add(Parsed<ConceptRelation> p) {
    move_into(concept_relations, p.records);
    report.append(p.report);
}
void Batch::add(Parsed<Sense> p) {
    move_into(senses, p.records);
    report.append(p.report);
}
void Batch::add(Parsed<LexicalGap> p) {
    move_into(gaps, p.records);
    report.append(p.report);
}
void Batch::add(Parsed<CognateRecord> p) {
    move_into(cognates, p.records);
    report.append(p.report);
}
void Batch::add(Parsed<IntraRecord> p) {
    move_into(intra_relations, p.records);
    report.append(p.report);
}

// --- merge ------------------------------------------------------------------

IngestReport merge(const Batch& batch, Store& store) {
    IngestReport report = batch.report;

    auto accept = [&](const char* kind, bool derived) {
        ++report.accepted[kind];
        if (!derived) ++report.accepted_lines;
    };
    auto reject = [&](const LineRef& where, std::string rule, std::string detail, bool derived = false) {
        report.rejected.push_back({where, std::move(rule), std::move(detail), !derived});
    };
    auto conflict = [&](const LineRef& where, std::string record, std::string resolution, bool line_outcome = true) {
        report.conflicts.push_back({where, std::move(record), std::move(resolution), line_outcome});
    };
    auto has_source = [&](const std::string& id) { return store.find_source(id) != nullptr; };

    for (const auto& [src, where, derived] : batch.sources) {
        const Provenance* existing = store.find_source(src.source_id);
        if (existing && !(*existing == src)) {
            conflict(where, "source " + src.source_id, "kept existing source definition");
            continue;
        }
        store.put(src);
        accept("sources", derived);
    }

    for (const auto& [lang, where, derived] : batch.languages) {
        const LanguageDescriptor* existing = store.find_language(lang.code);
        if (existing && !(*existing == lang)) {
            conflict(where, "language " + lang.code, "kept existing language definition");
            continue;
        }
        store.put(lang);
        accept("languages", derived);
    }

    for (const auto& [record, where, derived] : batch.concepts) {
        const Concept* existing = store.find_concept(record.id);
        if (existing && !(*existing == record)) {
            conflict(where, "concept " + record.id, "kept existing concept definition");
            continue;
        }
        store.put(record);
        accept("concepts", derived);
    }

    std::map<std::string, std::vector<std::string>> parents;
    for (const auto& rel : store.concept_relations())
        if (rel.kind == ConceptRelationKind::is_a) parents[rel.source].push_back(rel.target);
    for (const auto& [rel, where, derived] : batch.concept_relations) {
        if (!store.find_concept(rel.source) || !store.find_concept(rel.target)) {
            reject(where, "dangling-concept", "relation endpoint is not a known concept", derived);
            continue;
        }
        if (store.concept_relations().count(rel)) {
            accept("concept-relations", derived);
            continue;
        }
        if (rel.kind == ConceptRelationKind::is_a) {
            if (is_a_reachable(parents, rel.target, rel.source)) {
                reject(where, "is-a-cycle", "relation would close an is-a cycle", derived);
                continue;
            }
            parents[rel.source].push_back(rel.target);
        }
        store.put(rel);
        accept("concept-relations", derived);
    }

    for (const auto& [sense, where, derived] : batch.senses) {
        if (!store.find_language(sense.language)) {
            reject(where, "dangling-language", "unknown language '" + sense.language + "'", derived);
            continue;
        }
        if (!store.find_concept(sense.concept_id)) {
            reject(where, "dangling-concept", "unknown concept '" + sense.concept_id + "'", derived);
            continue;
        }
        if (!has_source(sense.source)) {
            reject(where, "dangling-source", "unknown source '" + sense.source + "'", derived);
            continue;
        }
        if (const Sense* existing = store.find_sense(sense.id); existing && !(*existing == sense)) {
            conflict(where, "sense " + sense.id, "kept existing sense");
            continue;
        }
        store.put(sense);
        accept("senses", derived);
        if (store.erase_gap(sense.language, sense.concept_id))
            conflict(where, "gap " + sense.language + "/" + sense.concept_id,
                     "sense wins over gap; existing gap removed", false);
    }

    for (const auto& [gap, where, derived] : batch.gaps) {
        if (!store.find_language(gap.language)) {
            reject(where, "dangling-language", "unknown language '" + gap.language + "'", derived);
            continue;
        }
        if (!store.find_concept(gap.concept_id)) {
            reject(where, "dangling-concept", "unknown concept '" + gap.concept_id + "'", derived);
            continue;
        }
        if (!has_source(gap.source)) {
            reject(where, "dangling-source", "unknown source '" + gap.source + "'", derived);
            continue;
        }
        if (!store.senses_of(gap.language, gap.concept_id).empty()) {
            conflict(where, "gap " + gap.language + "/" + gap.concept_id, "sense wins over gap; gap discarded");
            continue;
        }
        if (const LexicalGap* existing = store.find_gap(gap.language, gap.concept_id); existing && !(*existing == gap)) {
            conflict(where, "gap " + gap.language + "/" + gap.concept_id, "kept existing gap");
            continue;
        }
        store.put(gap);
        accept("gaps", derived);
    }

    auto resolve = [&](const SenseKey& key) { return store.find_sense(key.language, key.lemma, key.concept_id); };

    for (const auto& [rec, where, derived] : batch.cognates) {
        const Sense* a = resolve(rec.a);
        const Sense* b = resolve(rec.b);
        if (!a || !b) {
            reject(where, "dangling-sense", "cognate endpoint is not a known sense", derived);
            continue;
        }
        if (!has_source(rec.source)) {
            reject(where, "dangling-source", "unknown source '" + rec.source + "'", derived);
            continue;
        }
        auto rel = CrossLingualRelation::canonical(a->id, b->id, rec.source);
        auto existing = store.cognates().lower_bound(CrossLingualRelation{rel.source, rel.target, {}});
        if (existing != store.cognates().end() && existing->source == rel.source && existing->target == rel.target &&
            existing->provenance != rel.provenance) {
            conflict(where, "cognate " + rel.source + " ~ " + rel.target, "kept existing provenance");
            continue;
        }
        store.put(std::move(rel));
        accept("cognates", derived);
    }

    for (const auto& [rec, where, derived] : batch.intra_relations) {
        const Sense* a = resolve(rec.from);
        const Sense* b = resolve(rec.to);
        if (!a || !b) {
            reject(where, "dangling-sense", "relation endpoint is not a known sense", derived);
            continue;
        }
        if (!has_source(rec.source)) {
            reject(where, "dangling-source", "unknown source '" + rec.source + "'", derived);
            continue;
        }
        store.put(IntraLingualRelation{rec.kind, a->id, b->id, rec.source});
        accept("intra-relations", derived);
    }

    return report;
}

// --- bundles and directories ------------------------------------------------

namespace {

constexpr std::array<const char*, 8> kSections = {
    "sources", "languages", "concepts", "concept_relations", "senses", "gaps", "cognates", "intra_relations",
};

void add_section(Batch& batch, const std::string& section, const Lines& lines, const std::string& file) {
    if (section == "sources") batch.add(parse_sources_lines(lines, file));
    else if (section == "languages") batch.add(parse_languages_lines(lines, file));
    else if (section == "concepts") batch.add(parse_concepts_lines(lines, file));
    else if (section == "concept_relations") batch.add(parse_concept_relations_lines(lines, file));
    else if (section == "senses") batch.add(parse_senses_lines(lines, file));
    else if (section == "gaps") batch.add(parse_gaps_lines(lines, file));
    else if (section == "cognates") batch.add(parse_cognates_lines(lines, file));
    else if (section == "intra_relations") batch.add(parse_intra_lines(lines, file));
}

}  // namespace

Batch parse_bundle(std::istream& in, const std::string& file) {
    if (!in) throw Error(errc::io, "unreadable input stream");
    Batch batch;
    std::map<std::string, Lines> sections;
    std::string current;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.rfind("#@", 0) == 0) {
            current = trim(std::string_view(text).substr(2));
            if (std::find(kSections.begin(), kSections.end(), current) == kSections.end()) {
                batch.report.rejected.push_back({{file, number, text}, "section", "unknown section '" + current + "'"});
                current = "#invalid";
            }
            continue;
        }
        if (is_blank(text) || text.front() == '#') continue;
        if (current.empty() || current == "#invalid") {
            batch.report.rejected.push_back({{file, number, text}, "section", "line outside a known section"});
            continue;
        }
        sections[current].push_back({number, std::move(text)});
    }
    // Sections are applied in dependency order regardless of their order in the stream.
    for (const char* name : kSections)
        if (auto it = sections.find(name); it != sections.end()) add_section(batch, name, it->second, file);
    return batch;
}

Batch read_data_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(errc::io, "not a directory: " + dir.string());
    Batch batch;
    for (const char* name : kSections) {
        auto path = dir / (std::string(name) + ".tsv");
        if (!std::filesystem::exists(path)) continue;
        std::ifstream in(path);
        if (!in) throw Error(errc::io, "cannot open " + path.string());
        add_section(batch, name, read_lines(in), path.filename().string());
    }
    return batch;
}

LoadResult load_data_dir(const std::filesystem::path& dir, bool use_cache) {
    namespace fs = std::filesystem;
    const fs::path cache = dir / kSnapshotFile;
    if (use_cache && fs::exists(cache)) {
        auto cache_time = fs::last_write_time(cache);
        bool fresh = true;
        for (const char* name : kSections) {
            auto path = dir / (std::string(name) + ".tsv");
            if (fs::exists(path) && fs::last_write_time(path) > cache_time) fresh = false;
        }
        if (fresh) {
            if (auto store = load_snapshot(cache)) {
                LoadResult result{std::move(*store), {}, {}, true};
                result.violations = result.store.validate();
                return result;
            }
        }
    }

    LoadResult result;
    result.report = merge(read_data_dir(dir), result.store);
    result.violations = result.store.validate();
    if (use_cache && result.clean()) save_snapshot(result.store, cache);
    return result;
}

}  // namespace lexdiv::ingest
