#include "lexdiv/store.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace lexdiv {

namespace {

template <typename Map, typename Key>
std::vector<std::string> ids_at(const Map& map, const Key& key) {
    auto it = map.find(key);
    if (it == map.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::string describe(const LexicalGap& gap) {
    return "gap " + gap.language + "/" + gap.concept_id;
}

std::string describe(const ConceptRelation& rel) {
    return "concept-relation " + rel.source + " " + std::string(to_string(rel.kind)) + " " + rel.target;
}

std::string describe(const CrossLingualRelation& rel) {
    return "cognate " + rel.source + " ~ " + rel.target;
}

std::string describe(const IntraLingualRelation& rel) {
    return "intra-relation " + rel.source + " " + rel.kind.to_string() + " " + rel.target;
}

}  // namespace

std::size_t DomainTree::count(LexicalizationStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [s](const DomainNode& n) { return n.status == s; }));
}

// Copies re-insert so the pointer-based intra index refers to our own nodes.
Store::Store(const Store& other) {
    for (const auto& [id, src] : other.sources_) put(src);
    for (const auto& [id, lang] : other.languages_) put(lang);
    for (const auto& [id, record] : other.concepts_) put(record);
    for (const auto& rel : other.concept_relations_) put(rel);
    for (const auto& [id, sense] : other.senses_) put(sense);
    for (const auto& [key, gap] : other.gaps_) put(gap);
    for (const auto& rel : other.cognates_) put(rel);
    for (const auto& rel : other.intra_) put(rel);
}

Store& Store::operator=(const Store& other) {
    if (this != &other) *this = Store(other);
    return *this;
}

// --- mutators ---------------------------------------------------------------

void Store::put(LanguageDescriptor language) {
    auto code = language.code;
    languages_.insert_or_assign(std::move(code), std::move(language));
}

void Store::put(Concept record) {
    auto id = record.id;
    concepts_.insert_or_assign(std::move(id), std::move(record));
}

void Store::put(ConceptRelation relation) {
    if (!concept_relations_.insert(relation).second) return;
    relations_by_concept_[relation.source].push_back(relation);
    if (relation.target != relation.source) relations_by_concept_[relation.target].push_back(relation);
}

void Store::put(Sense sense) {
    if (sense.id.empty()) sense.id = make_sense_id(sense.language, sense.concept_id, sense.lemma);
    if (auto it = senses_.find(sense.id); it != senses_.end()) {
        const Sense& old = it->second;
        senses_by_key_[{old.language, old.concept_id}].erase(old.id);
        senses_by_lemma_[{old.language, old.lemma}].erase(old.id);
        senses_by_concept_[old.concept_id].erase(old.id);
        senses_by_language_[old.language].erase(old.id);
    }
    senses_by_key_[{sense.language, sense.concept_id}].insert(sense.id);
    senses_by_lemma_[{sense.language, sense.lemma}].insert(sense.id);
    senses_by_concept_[sense.concept_id].insert(sense.id);
    senses_by_language_[sense.language].insert(sense.id);
    auto id = sense.id;
    senses_.insert_or_assign(std::move(id), std::move(sense));
}

void Store::put(LexicalGap gap) {
    LangConcept key{gap.language, gap.concept_id};
    gaps_.insert_or_assign(std::move(key), std::move(gap));
}

bool Store::erase_gap(const std::string& language, const std::string& concept_id) {
    return gaps_.erase({language, concept_id}) > 0;
}

void Store::put(CrossLingualRelation relation) {
    relation = CrossLingualRelation::canonical(std::move(relation.source), std::move(relation.target),
                                               std::move(relation.provenance));
    // One link per unordered sense pair; a second provenance does not add an edge.
    auto existing = cognates_.lower_bound(CrossLingualRelation{relation.source, relation.target, {}});
    if (existing != cognates_.end() && existing->source == relation.source && existing->target == relation.target)
        return;
    cognate_adj_[relation.source].insert(relation.target);
    cognate_adj_[relation.target].insert(relation.source);
    cognates_.insert(std::move(relation));
}

void Store::put(IntraLingualRelation relation) {
    auto [it, inserted] = intra_.insert(std::move(relation));
    if (!inserted) return;
    intra_adj_[it->source].push_back(&*it);
    if (it->target != it->source) intra_adj_[it->target].push_back(&*it);
}

void Store::put(Provenance source) {
    auto id = source.source_id;
    sources_.insert_or_assign(std::move(id), std::move(source));
}

// --- lookups ----------------------------------------------------------------

const LanguageDescriptor* Store::find_language(const std::string& code) const {
    auto it = languages_.find(code);
    return it == languages_.end() ? nullptr : &it->second;
}

const Concept* Store::find_concept(const std::string& id) const {
    auto it = concepts_.find(id);
    return it == concepts_.end() ? nullptr : &it->second;
}

const Sense* Store::find_sense(const std::string& id) const {
    auto it = senses_.find(id);
    return it == senses_.end() ? nullptr : &it->second;
}

const Sense* Store::find_sense(const std::string& language, const std::string& lemma,
                               const std::string& concept_id) const {
    auto it = senses_by_lemma_.find({language, lemma});
    if (it == senses_by_lemma_.end()) return nullptr;
    for (const auto& id : it->second) {
        const Sense& s = senses_.at(id);
        if (s.concept_id == concept_id) return &s;
    }
    return nullptr;
}

const Provenance* Store::find_source(const std::string& id) const {
    auto it = sources_.find(id);
    return it == sources_.end() ? nullptr : &it->second;
}

const LexicalGap* Store::find_gap(const std::string& language, const std::string& concept_id) const {
    auto it = gaps_.find({language, concept_id});
    return it == gaps_.end() ? nullptr : &it->second;
}

std::vector<std::string> Store::senses_of(const std::string& language, const std::string& concept_id) const {
    return ids_at(senses_by_key_, LangConcept{language, concept_id});
}

std::vector<std::string> Store::senses_of_concept(const std::string& concept_id) const {
    return ids_at(senses_by_concept_, concept_id);
}

std::vector<std::string> Store::senses_of_language(const std::string& language) const {
    return ids_at(senses_by_language_, language);
}

std::vector<std::string> Store::lemmas_of(const std::string& language, const std::string& concept_id) const {
    std::vector<std::string> out;
    for (const auto& id : senses_of(language, concept_id)) out.push_back(senses_.at(id).lemma);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Store::cognates_of(const std::string& sense_id) const {
    return ids_at(cognate_adj_, sense_id);
}

std::vector<std::string> Store::is_a_children(const std::string& concept_id) const {
    std::vector<std::string> out;
    auto it = relations_by_concept_.find(concept_id);
    if (it == relations_by_concept_.end()) return out;
    for (const auto& rel : it->second)
        if (rel.kind == ConceptRelationKind::is_a && rel.target == concept_id && rel.source != concept_id)
            out.push_back(rel.source);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Store::require_language(const std::string& code) const {
    if (!find_language(code)) throw Error(errc::unknown_language, "unknown language '" + code + "'");
}

void Store::require_concept(const std::string& id, const char* code) const {
    if (!find_concept(id)) throw Error(code, "unknown concept '" + id + "'");
}

// --- queries ----------------------------------------------------------------

LexicalizationStatus Store::status(const std::string& language, const std::string& concept_id) const {
    require_language(language);
    require_concept(concept_id);
    if (auto it = senses_by_key_.find({language, concept_id}); it != senses_by_key_.end() && !it->second.empty())
        return LexicalizationStatus::lexicalised;
    if (gaps_.count({language, concept_id})) return LexicalizationStatus::gap;
    return LexicalizationStatus::unknown;
}

std::vector<WordMatch> Store::lookup_word(const std::string& language, const std::string& lemma) const {
    require_language(language);
    std::vector<WordMatch> out;
    auto normalized = normalize_lemma(lemma);
    if (!normalized) return out;
    for (const auto& id : ids_at(senses_by_lemma_, std::pair{language, *normalized})) {
        const Sense& sense = senses_.at(id);
        WordMatch match{sense, {}, {}};
        if (const Concept* c = find_concept(sense.concept_id)) match.concept_record = *c;
        if (auto it = intra_adj_.find(id); it != intra_adj_.end()) {
            for (const IntraLingualRelation* rel : it->second) {
                bool outgoing = rel->source == id;
                const Sense* other = find_sense(outgoing ? rel->target : rel->source);
                if (other) match.relations.push_back({rel->kind.to_string(), outgoing, *other, rel->provenance});
            }
        }
        for (const auto& other_id : cognates_of(id)) {
            const Sense* other = find_sense(other_id);
            auto rel = CrossLingualRelation::canonical(id, other_id, {});
            auto stored = cognates_.lower_bound(rel);
            if (other && stored != cognates_.end())
                match.relations.push_back({"cognate", true, *other, stored->provenance});
        }
        out.push_back(std::move(match));
    }
    return out;
}

std::map<std::string, LexicalisationEntry> Store::concept_lexicalisations(const std::string& concept_id) const {
    require_concept(concept_id);
    std::map<std::string, LexicalisationEntry> out;
    for (const auto& [code, lang] : languages_) {
        LexicalisationEntry entry;
        entry.status = status(code, concept_id);
        if (entry.status == LexicalizationStatus::lexicalised) entry.lemmas = lemmas_of(code, concept_id);
        entry.on_map = entry.status != LexicalizationStatus::unknown;
        out.emplace(code, std::move(entry));
    }
    return out;
}

ConceptNeighborhood Store::neighborhood(const std::string& concept_id, const std::string& language, int depth,
                                        const std::vector<ConceptRelationKind>& kinds) const {
    require_concept(concept_id);
    require_language(language);
    if (depth < 1) throw Error(errc::precondition, "neighborhood depth must be >= 1");

    auto included = [&](ConceptRelationKind k) {
        return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    };

    std::map<std::string, std::size_t> distance{{concept_id, 0}};
    std::deque<std::string> queue{concept_id};
    while (!queue.empty()) {
        std::string current = queue.front();
        queue.pop_front();
        std::size_t d = distance[current];
        if (d == static_cast<std::size_t>(depth)) continue;
        auto it = relations_by_concept_.find(current);
        if (it == relations_by_concept_.end()) continue;
        for (const auto& rel : it->second) {
            if (!included(rel.kind)) continue;
            const std::string& next = rel.source == current ? rel.target : rel.source;
            if (!find_concept(next) || distance.count(next)) continue;
            distance.emplace(next, d + 1);
            queue.push_back(next);
        }
    }

    ConceptNeighborhood out{concept_id, language, {}, {}};
    for (const auto& [id, d] : distance) {
        ConceptNode node{id, d, status(language, id), {}};
        if (node.status == LexicalizationStatus::lexicalised) node.lemmas = lemmas_of(language, id);
        out.nodes.push_back(std::move(node));
    }
    std::stable_sort(out.nodes.begin(), out.nodes.end(),
                     [](const ConceptNode& a, const ConceptNode& b) { return a.distance < b.distance; });
    for (const auto& rel : concept_relations_)
        if (included(rel.kind) && distance.count(rel.source) && distance.count(rel.target))
            out.edges.push_back(rel);
    return out;
}

DomainTree Store::domain_tree(const std::string& root, const std::string& language) const {
    require_concept(root, errc::unknown_root);
    require_language(language);

    DomainTree tree{root, language, {}};
    std::set<std::string> visited;
    // Explicit stack of (concept, parent, depth); children pushed in reverse
    // so they pop in ascending id order.
    struct Frame {
        std::string concept_id;
        std::optional<std::string> parent;
        std::size_t depth;
    };
    std::vector<Frame> stack{{root, std::nullopt, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!visited.insert(f.concept_id).second) continue;
        DomainNode node;
        node.concept_id = f.concept_id;
        node.parent = f.parent;
        node.depth = f.depth;
        node.status = status(language, f.concept_id);
        if (node.status == LexicalizationStatus::lexicalised) node.lemmas = lemmas_of(language, f.concept_id);
        node.children = is_a_children(f.concept_id);
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            if (!visited.count(*it) && find_concept(*it)) stack.push_back({*it, f.concept_id, f.depth + 1});
        tree.nodes.push_back(std::move(node));
    }
    return tree;
}

LanguageProfile Store::language_profile(const std::string& language) const {
    require_language(language);
    LanguageProfile profile;
    profile.language = languages_.at(language);
    std::set<std::string> lemmas;
    for (const auto& id : senses_of_language(language)) {
        ++profile.senses;
        lemmas.insert(senses_.at(id).lemma);
    }
    profile.distinct_lemmas = lemmas.size();
    for (const auto& [key, gap] : gaps_)
        if (key.first == language) ++profile.gaps;
    auto in_language = [&](const std::string& sense_id) {
        const Sense* s = find_sense(sense_id);
        return s && s->language == language;
    };
    for (const auto& rel : intra_)
        if (in_language(rel.source) || in_language(rel.target)) ++profile.intra_relations;
    for (const auto& rel : cognates_)
        if (in_language(rel.source) || in_language(rel.target)) ++profile.cognate_relations;
    return profile;
}

// --- validation -------------------------------------------------------------

std::vector<Violation> Store::validate() const {
    std::vector<Violation> out;
    auto report = [&](std::string invariant, std::vector<std::string> records, std::vector<std::string> provenance,
                      std::string message) {
        out.push_back({std::move(invariant), std::move(records), std::move(provenance), std::move(message)});
    };
    auto check_source = [&](const std::string& record, const std::string& source) {
        if (!find_source(source))
            report("provenance", {record}, {source}, "provenance '" + source + "' is not a known source");
    };

    for (const auto& [code, lang] : languages_) {
        if (!is_language_code(code))
            report("language-code", {"language " + code}, {}, "language code must be three lowercase letters");
        if (lang.latitude.has_value() != lang.longitude.has_value())
            report("coordinates", {"language " + code}, {}, "latitude and longitude must be both present or absent");
        if ((lang.latitude && (*lang.latitude < -90 || *lang.latitude > 90)) ||
            (lang.longitude && (*lang.longitude < -180 || *lang.longitude > 180)))
            report("coordinates", {"language " + code}, {}, "coordinates out of range");
    }

    for (const auto& [id, record] : concepts_) {
        auto it = senses_by_concept_.find(id);
        if (it == senses_by_concept_.end() || it->second.empty())
            report("concept-lexicalised", {"concept " + id}, {}, "concept has no sense in any lexicon");
    }

    std::map<std::string, std::vector<std::string>> is_a;
    for (const auto& rel : concept_relations_) {
        if (rel.source == rel.target) {
            report("no-self-loop", {describe(rel)}, {}, "concept relation is a self-loop");
            continue;
        }
        if (!find_concept(rel.source) || !find_concept(rel.target)) {
            report("dangling-concept", {describe(rel)}, {}, "concept relation endpoint does not resolve");
            continue;
        }
        if (rel.kind == ConceptRelationKind::is_a) is_a[rel.source].push_back(rel.target);
    }

    // Kosaraju over the is-a subgraph; every component with >1 node is a cycle.
    {
        std::vector<std::string> order;
        std::set<std::string> seen;
        for (const auto& [start, unused] : is_a) {
            if (seen.count(start)) continue;
            std::vector<std::pair<std::string, std::size_t>> stack{{start, 0}};
            seen.insert(start);
            while (!stack.empty()) {
                auto& [node, next] = stack.back();
                auto it = is_a.find(node);
                if (it != is_a.end() && next < it->second.size()) {
                    const std::string& child = it->second[next++];
                    if (seen.insert(child).second) stack.emplace_back(child, 0);
                } else {
                    order.push_back(node);
                    stack.pop_back();
                }
            }
        }
        std::map<std::string, std::vector<std::string>> reversed;
        for (const auto& [src, targets] : is_a)
            for (const auto& t : targets) reversed[t].push_back(src);
        std::set<std::string> assigned;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (assigned.count(*it)) continue;
            std::vector<std::string> component;
            std::vector<std::string> stack{*it};
            assigned.insert(*it);
            while (!stack.empty()) {
                std::string node = stack.back();
                stack.pop_back();
                component.push_back(node);
                for (const auto& prev : reversed[node])
                    if (assigned.insert(prev).second) stack.push_back(prev);
            }
            if (component.size() > 1) {
                std::sort(component.begin(), component.end());
                std::vector<std::string> records;
                for (const auto& c : component) records.push_back("concept " + c);
                report("is-a-acyclic", std::move(records), {}, "is-a relations form a cycle");
            }
        }
    }

    std::map<std::tuple<std::string, std::string, std::string>, std::vector<std::string>> sense_keys;
    for (const auto& [id, sense] : senses_) {
        std::string record = "sense " + id;
        if (!find_language(sense.language))
            report("dangling-language", {record}, {sense.source}, "sense language does not resolve");
        if (!find_concept(sense.concept_id))
            report("dangling-concept", {record}, {sense.source}, "sense concept does not resolve");
        auto normalized = normalize_lemma(sense.lemma);
        if (!normalized || normalized->empty())
            report("empty-lemma", {record}, {sense.source}, "lemma is empty after trimming");
        check_source(record, sense.source);
        sense_keys[{sense.language, sense.lemma, sense.concept_id}].push_back(id);
    }
    for (const auto& [key, ids] : sense_keys)
        if (ids.size() > 1) {
            std::vector<std::string> records;
            for (const auto& id : ids) records.push_back("sense " + id);
            report("sense-unique", std::move(records), {}, "duplicate (language, lemma, concept)");
        }

    for (const auto& [key, gap] : gaps_) {
        std::string record = describe(gap);
        if (!find_language(gap.language))
            report("dangling-language", {record}, {gap.source}, "gap language does not resolve");
        if (!find_concept(gap.concept_id))
            report("dangling-concept", {record}, {gap.source}, "gap concept does not resolve");
        check_source(record, gap.source);
        auto senses = senses_of(gap.language, gap.concept_id);
        if (!senses.empty()) {
            std::vector<std::string> records{record};
            std::vector<std::string> provenance{gap.source};
            for (const auto& id : senses) {
                records.push_back("sense " + id);
                provenance.push_back(senses_.at(id).source);
            }
            report("mutual-exclusion", std::move(records), std::move(provenance),
                   "a lexical gap coexists with a sense for the same language and concept");
        }
    }

    for (const auto& rel : cognates_) {
        std::string record = describe(rel);
        const Sense* a = find_sense(rel.source);
        const Sense* b = find_sense(rel.target);
        check_source(record, rel.provenance);
        if (!a || !b) {
            report("dangling-sense", {record}, {rel.provenance}, "cognate endpoint does not resolve");
            continue;
        }
        if (a->language == b->language)
            report("cognate-cross-language", {record}, {rel.provenance}, "cognates must join different languages");
    }

    for (const auto& rel : intra_) {
        std::string record = describe(rel);
        check_source(record, rel.provenance);
        if (rel.source == rel.target) {
            report("no-self-loop", {record}, {rel.provenance}, "intra-lingual relation is a self-loop");
            continue;
        }
        const Sense* a = find_sense(rel.source);
        const Sense* b = find_sense(rel.target);
        if (!a || !b) {
            report("dangling-sense", {record}, {rel.provenance}, "relation endpoint does not resolve");
            continue;
        }
        if (a->language != b->language)
            report("intra-same-language", {record}, {rel.provenance}, "intra-lingual relation crosses languages");
    }

    return out;
}

Store Store::redistributable_subset() const {
    auto ok = [&](const std::string& source) {
        const Provenance* p = find_source(source);
        return p && p->redistributable;
    };
    Store out;
    for (const auto& [id, src] : sources_) out.put(src);
    for (const auto& [id, lang] : languages_) out.put(lang);
    for (const auto& [id, record] : concepts_) out.put(record);
    for (const auto& rel : concept_relations_) out.put(rel);
    for (const auto& [id, sense] : senses_)
        if (ok(sense.source)) out.put(sense);
    for (const auto& [key, gap] : gaps_)
        if (ok(gap.source)) out.put(gap);
    for (const auto& rel : cognates_)
        if (ok(rel.provenance) && out.find_sense(rel.source) && out.find_sense(rel.target)) out.put(rel);
    for (const auto& rel : intra_)
        if (ok(rel.provenance) && out.find_sense(rel.source) && out.find_sense(rel.target)) out.put(rel);
    return out;
}

bool Store::operator==(const Store& other) const {
    return languages_ == other.languages_ && concepts_ == other.concepts_ &&
           concept_relations_ == other.concept_relations_ && senses_ == other.senses_ &&
           gaps_ == other.gaps_ && cognates_ == other.cognates_ && intra_ == other.intra_ &&
           sources_ == other.sources_;
}

}  // namespace lexdiv
