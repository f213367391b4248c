#pragma once
// Test oracles and random generators. The oracles are deliberately naive and
// share no code with the library: linear scans, recursive DFS, fixpoints.

#include "lexdiv/store.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace support {

using Partition = std::set<std::set<std::string>>;

// Connected components of `nodes` under `edges`, ignoring edges that leave
// the node set.
inline Partition dfs_components(const std::vector<std::string>& nodes,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
    std::set<std::string> in(nodes.begin(), nodes.end());
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : edges) {
        if (!in.count(a) || !in.count(b)) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<std::string> seen;
    Partition out;
    for (const auto& start : nodes) {
        if (seen.count(start)) continue;
        std::set<std::string> component;
        std::vector<std::string> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            auto node = stack.back();
            stack.pop_back();
            component.insert(node);
            for (const auto& next : adj[node])
                if (seen.insert(next).second) stack.push_back(next);
        }
        out.insert(component);
    }
    return out;
}

struct PairTally {
    std::size_t overlap = 0;
    std::size_t cognate_overlap = 0;
};

// Enumerates every concept and scans the raw sense and cognate tables.
inline PairTally enumerate_similarity(const lexdiv::Store& store, const std::string& a, const std::string& b) {
    auto has = [&](const std::string& lang, const std::string& concept_id) {
        for (const auto& [id, s] : store.senses())
            if (s.language == lang && s.concept_id == concept_id) return true;
        return false;
    };
    PairTally t;
    for (const auto& [concept_id, record] : store.concepts()) {
        if (!has(a, concept_id) || !has(b, concept_id)) continue;
        ++t.overlap;
        for (const auto& rel : store.cognates()) {
            const lexdiv::Sense* x = store.find_sense(rel.source);
            const lexdiv::Sense* y = store.find_sense(rel.target);
            if (!x || !y || x->concept_id != concept_id || y->concept_id != concept_id) continue;
            if ((x->language == a && y->language == b) || (x->language == b && y->language == a)) {
                ++t.cognate_overlap;
                break;
            }
        }
    }
    return t;
}

// Concepts reachable from root by walking is-a edges child-ward, by fixpoint.
inline std::set<std::string> reachable_is_a(const lexdiv::Store& store, const std::string& root) {
    std::set<std::string> reached{root};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& rel : store.concept_relations())
            if (rel.kind == lexdiv::ConceptRelationKind::is_a && reached.count(rel.target) &&
                store.find_concept(rel.source) && reached.insert(rel.source).second)
                grew = true;
    }
    return reached;
}

// Undirected hop distances from focus over relations of the given kinds,
// by repeated relaxation.
inline std::map<std::string, std::size_t> hop_distances(const lexdiv::Store& store, const std::string& focus,
                                                        std::size_t depth,
                                                        const std::set<lexdiv::ConceptRelationKind>& kinds) {
    std::map<std::string, std::size_t> dist{{focus, 0}};
    for (std::size_t round = 0; round < depth; ++round) {
        auto next = dist;
        for (const auto& rel : store.concept_relations()) {
            if (!kinds.count(rel.kind)) continue;
            if (!store.find_concept(rel.source) || !store.find_concept(rel.target)) continue;
            for (auto [from, to] : {std::pair{rel.source, rel.target}, std::pair{rel.target, rel.source}}) {
                auto it = dist.find(from);
                if (it == dist.end()) continue;
                auto& slot = next.try_emplace(to, it->second + 1).first->second;
                slot = std::min(slot, it->second + 1);
            }
        }
        dist = std::move(next);
    }
    return dist;
}

// Three-lowercase-letter code for an index below 26 * 26.
inline std::string code(std::size_t i) {
    std::string s = "q";
    s += static_cast<char>('a' + (i / 26) % 26);
    s += static_cast<char>('a' + i % 26);
    return s;
}

inline lexdiv::Provenance open_source(const std::string& id = "src") { return {id, "CC-BY-4.0", true}; }

// A store holding one concept `c` with `senses` senses spread over a few
// languages, plus random cognate edges, some of them to a decoy concept.
struct RandomConcept {
    lexdiv::Store store;
    std::vector<std::string> sense_ids;
    std::vector<std::pair<std::string, std::string>> edges;
};

inline RandomConcept random_concept(std::mt19937_64& rng, std::size_t senses) {
    RandomConcept out;
    auto& s = out.store;
    s.put(open_source());
    s.put(lexdiv::Concept{"c", "target concept"});
    s.put(lexdiv::Concept{"decoy", "other concept"});
    std::uniform_int_distribution<std::size_t> lang_count(1, std::max<std::size_t>(2, senses / 2 + 1));
    std::size_t languages = lang_count(rng);
    for (std::size_t i = 0; i < languages; ++i) s.put(lexdiv::LanguageDescriptor{code(i), "L" + code(i)});
    std::uniform_int_distribution<std::size_t> pick_lang(0, languages - 1);
    for (std::size_t i = 0; i < senses; ++i) {
        lexdiv::Sense sense{"", code(pick_lang(rng)), "w" + std::to_string(i), "c", "src"};
        s.put(sense);
        out.sense_ids.push_back(lexdiv::make_sense_id(sense.language, "c", sense.lemma));
        lexdiv::Sense decoy{"", code(pick_lang(rng)), "d" + std::to_string(i), "decoy", "src"};
        s.put(decoy);
    }
    if (senses >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, senses - 1);
        std::uniform_int_distribution<std::size_t> edge_count(0, senses + senses / 2);
        std::size_t m = edge_count(rng);
        for (std::size_t e = 0; e < m; ++e) {
            auto a = out.sense_ids[pick(rng)];
            auto b = out.sense_ids[pick(rng)];
            if (a == b) continue;
            s.put(lexdiv::CrossLingualRelation::canonical(a, b, "src"));
            out.edges.emplace_back(a, b);
        }
        // edges into the decoy concept must not merge clusters
        for (std::size_t e = 0; e < senses / 4; ++e) {
            auto a = out.sense_ids[pick(rng)];
            auto decoy_ids = s.senses_of_concept("decoy");
            auto b = decoy_ids[pick(rng) % decoy_ids.size()];
            s.put(lexdiv::CrossLingualRelation::canonical(a, b, "src"));
        }
    }
    return out;
}

// Small random multilingual store for similarity properties.
inline lexdiv::Store random_store(std::mt19937_64& rng) {
    lexdiv::Store s;
    s.put(open_source());
    std::uniform_int_distribution<std::size_t> lang_n(2, 5), concept_n(1, 12);
    std::size_t languages = lang_n(rng), concepts = concept_n(rng);
    for (std::size_t i = 0; i < languages; ++i) s.put(lexdiv::LanguageDescriptor{code(i), "L" + code(i)});
    for (std::size_t c = 0; c < concepts; ++c) s.put(lexdiv::Concept{"k" + std::to_string(c), "gloss"});
    std::bernoulli_distribution present(0.6), second_lemma(0.2), linked(0.35);
    for (std::size_t i = 0; i < languages; ++i)
        for (std::size_t c = 0; c < concepts; ++c) {
            if (!present(rng)) continue;
            std::string concept_id = "k" + std::to_string(c);
            s.put(lexdiv::Sense{"", code(i), "a" + std::to_string(c), concept_id, "src"});
            if (second_lemma(rng)) s.put(lexdiv::Sense{"", code(i), "b" + std::to_string(c), concept_id, "src"});
        }
    std::vector<std::string> ids;
    for (const auto& [id, sense] : s.senses()) ids.push_back(id);
    for (std::size_t x = 0; x < ids.size(); ++x)
        for (std::size_t y = x + 1; y < ids.size(); ++y) {
            const auto& a = s.senses().at(ids[x]);
            const auto& b = s.senses().at(ids[y]);
            if (a.concept_id == b.concept_id && a.language != b.language && linked(rng))
                s.put(lexdiv::CrossLingualRelation::canonical(ids[x], ids[y], "src"));
        }
    return s;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    auto dir = std::filesystem::temp_directory_path() / ("lexdiv-" + tag + "-" + std::to_string(rng()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace support
