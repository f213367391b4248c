#pragma once
// Diversity analytics over a read-only store: per-concept cognate clusters,
// the concept diversity index, and pairwise lexicon similarity.

#include "lexdiv/store.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lexdiv::analytics {

struct CognateClustering {
    std::string concept_id;
    // Sense ids per cluster. Members are ordered by (language, lemma) and
    // clusters by their first member.
    std::vector<std::vector<std::string>> clusters;
    // Each language maps to the cluster of its lexicographically first lemma.
    std::map<std::string, std::size_t> language_cluster;
    // Languages whose senses fall into more than one cluster.
    std::set<std::string> ambiguous;
};

// Connected components of the concept's senses under cognate edges whose
// both endpoints are senses of this concept.
CognateClustering cognate_clusters(const Store& store, const std::string& concept_id);

struct Diversity {
    double index = 0;          // (k - 1) / (n - 1), or 0 when n == 1
    std::size_t languages = 0;  // n: languages lexicalising the concept
    std::size_t clusters = 0;   // k: distinct language-level clusters
};

Diversity diversity_index(const Store& store, const std::string& concept_id);

struct SimilarityRecord {
    std::string lang_a;  // lang_a < lang_b
    std::string lang_b;
    double score = 0;
    std::size_t overlap = 0;
    std::size_t cognate_overlap = 0;

    bool operator==(const SimilarityRecord&) const = default;
};

inline constexpr std::size_t kDefaultMinOverlap = 20;

// score = cognate_overlap / overlap, where overlap counts concepts both
// languages lexicalise and cognate_overlap those among them joined by at
// least one cognate edge between the two languages' senses of that concept.
// nullopt when overlap < min_overlap or overlap == 0.
std::optional<SimilarityRecord> lexicon_similarity(const Store& store, const std::string& lang_a,
                                                   const std::string& lang_b,
                                                   std::size_t min_overlap = kDefaultMinOverlap);

// Every unordered language pair meeting min_overlap, ordered by (lang_a, lang_b).
std::vector<SimilarityRecord> similarity_matrix(const Store& store, std::size_t min_overlap = kDefaultMinOverlap);

}  // namespace lexdiv::analytics
