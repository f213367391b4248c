#include "lexdiv/analytics.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace lexdiv::analytics {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

void require_concept(const Store& store, const std::string& concept_id) {
    if (!store.find_concept(concept_id)) throw Error(errc::unknown_concept, "unknown concept '" + concept_id + "'");
}

}  // namespace

CognateClustering cognate_clusters(const Store& store, const std::string& concept_id) {
    require_concept(store, concept_id);

    std::vector<const Sense*> senses;
    for (const auto& id : store.senses_of_concept(concept_id)) senses.push_back(store.find_sense(id));
    std::sort(senses.begin(), senses.end(), [](const Sense* a, const Sense* b) {
        return std::tie(a->language, a->lemma, a->id) < std::tie(b->language, b->lemma, b->id);
    });

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < senses.size(); ++i) index.emplace(senses[i]->id, i);

    DisjointSets sets(senses.size());
    for (std::size_t i = 0; i < senses.size(); ++i)
        for (const auto& other : store.cognates_of(senses[i]->id))
            if (auto it = index.find(other); it != index.end()) sets.unite(i, it->second);

    CognateClustering out;
    out.concept_id = concept_id;
    std::map<std::size_t, std::size_t> cluster_of_root;
    std::vector<std::size_t> cluster_of(senses.size());
    for (std::size_t i = 0; i < senses.size(); ++i) {
        auto [it, inserted] = cluster_of_root.emplace(sets.find(i), out.clusters.size());
        if (inserted) out.clusters.emplace_back();
        out.clusters[it->second].push_back(senses[i]->id);
        cluster_of[i] = it->second;
    }

    std::map<std::string, std::set<std::size_t>> clusters_per_language;
    for (std::size_t i = 0; i < senses.size(); ++i) {
        // Senses are sorted by (language, lemma): the first seen is the first lemma.
        out.language_cluster.emplace(senses[i]->language, cluster_of[i]);
        clusters_per_language[senses[i]->language].insert(cluster_of[i]);
    }
    for (const auto& [lang, clusters] : clusters_per_language)
        if (clusters.size() > 1) out.ambiguous.insert(lang);
    return out;
}

Diversity diversity_index(const Store& store, const std::string& concept_id) {
    CognateClustering clustering = cognate_clusters(store, concept_id);
    Diversity d;
    d.languages = clustering.language_cluster.size();
    if (d.languages == 0)
        throw Error(errc::no_lexicalisation, "concept '" + concept_id + "' is not lexicalised in any language");
    std::set<std::size_t> distinct;
    for (const auto& [lang, cluster] : clustering.language_cluster) distinct.insert(cluster);
    d.clusters = distinct.size();
    d.index = d.languages == 1 ? 0.0
                               : static_cast<double>(d.clusters - 1) / static_cast<double>(d.languages - 1);
    return d;
}

std::optional<SimilarityRecord> lexicon_similarity(const Store& store, const std::string& lang_a,
                                                   const std::string& lang_b, std::size_t min_overlap) {
    for (const auto* code : {&lang_a, &lang_b})
        if (!store.find_language(*code)) throw Error(errc::unknown_language, "unknown language '" + *code + "'");
    if (lang_a == lang_b) throw Error(errc::same_language, "similarity needs two distinct languages");

    SimilarityRecord rec;
    rec.lang_a = std::min(lang_a, lang_b);
    rec.lang_b = std::max(lang_a, lang_b);

    std::set<std::string> concepts_a;
    for (const auto& id : store.senses_of_language(rec.lang_a)) concepts_a.insert(store.find_sense(id)->concept_id);
    for (const auto& concept_id : concepts_a) {
        auto senses_b = store.senses_of(rec.lang_b, concept_id);
        if (senses_b.empty()) continue;
        ++rec.overlap;
        std::set<std::string> b_ids(senses_b.begin(), senses_b.end());
        bool linked = false;
        for (const auto& a_id : store.senses_of(rec.lang_a, concept_id)) {
            for (const auto& other : store.cognates_of(a_id))
                if (b_ids.count(other)) {
                    linked = true;
                    break;
                }
            if (linked) break;
        }
        if (linked) ++rec.cognate_overlap;
    }
    if (rec.overlap == 0 || rec.overlap < min_overlap) return std::nullopt;
    rec.score = static_cast<double>(rec.cognate_overlap) / static_cast<double>(rec.overlap);
    return rec;
}

std::vector<SimilarityRecord> similarity_matrix(const Store& store, std::size_t min_overlap) {
    using Pair = std::pair<std::string, std::string>;
    std::map<Pair, std::size_t> overlap;
    std::set<std::tuple<std::string, std::string, std::string>> linked;  // (a, b, concept)

    for (const auto& entry : store.concepts()) {
        const std::string& concept_id = entry.first;
        std::set<std::string> langs;
        for (const auto& id : store.senses_of_concept(concept_id)) langs.insert(store.find_sense(id)->language);
        for (auto a = langs.begin(); a != langs.end(); ++a)
            for (auto b = std::next(a); b != langs.end(); ++b) ++overlap[{*a, *b}];
    }
    for (const auto& rel : store.cognates()) {
        const Sense* s = store.find_sense(rel.source);
        const Sense* t = store.find_sense(rel.target);
        if (!s || !t || s->concept_id != t->concept_id || s->language == t->language) continue;
        linked.emplace(std::min(s->language, t->language), std::max(s->language, t->language), s->concept_id);
    }
    std::map<Pair, std::size_t> cognate_overlap;
    for (const auto& [a, b, c] : linked) ++cognate_overlap[{a, b}];

    std::vector<SimilarityRecord> out;
    for (const auto& [pair, n] : overlap) {
        if (n == 0 || n < min_overlap) continue;
        SimilarityRecord rec{pair.first, pair.second, 0.0, n, 0};
        if (auto it = cognate_overlap.find(pair); it != cognate_overlap.end()) rec.cognate_overlap = it->second;
        rec.score = static_cast<double>(rec.cognate_overlap) / static_cast<double>(n);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace lexdiv::analytics
