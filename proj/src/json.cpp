#include "lexdiv/json.hpp"

namespace lexdiv::json {

namespace {

template <typename T>
json nullable(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json status_json(LexicalizationStatus s) { return std::string(to_string(s)); }

}  // namespace

json encode(const LanguageDescriptor& l) {
    return {{"code", l.code},
            {"name", l.name},
            {"phylum", nullable(l.phylum)},
            {"latitude", nullable(l.latitude)},
            {"longitude", nullable(l.longitude)}};
}

json encode(const Concept& c) {
    return {{"id", c.id},
            {"gloss", c.gloss},
            {"pos", std::string(to_string(c.pos))},
            {"pwn30_id", nullable(c.pwn30_id)},
            {"interlingual", c.interlingual}};
}

json encode(const ConceptRelation& r) {
    return {{"source", r.source}, {"target", r.target}, {"kind", std::string(to_string(r.kind))}};
}

json encode(const Sense& s) {
    return {{"id", s.id}, {"language", s.language}, {"lemma", s.lemma}, {"concept", s.concept_id}, {"source", s.source}};
}

json encode(const Violation& v) {
    return {{"invariant", v.invariant}, {"records", v.records}, {"provenance", v.provenance}, {"message", v.message}};
}

json encode(const WordMatch& m) {
    json relations = json::array();
    for (const auto& link : m.relations)
        relations.push_back({{"kind", link.kind},
                             {"outgoing", link.outgoing},
                             {"other", encode(link.other)},
                             {"provenance", link.provenance}});
    return {{"sense", encode(m.sense)}, {"concept", encode(m.concept_record)}, {"relations", relations}};
}

json encode(const ConceptNeighborhood& n) {
    json nodes = json::array();
    for (const auto& node : n.nodes)
        nodes.push_back({{"concept", node.concept_id},
                         {"distance", node.distance},
                         {"status", status_json(node.status)},
                         {"lemmas", node.lemmas}});
    json edges = json::array();
    for (const auto& e : n.edges) edges.push_back(encode(e));
    return {{"focus", n.focus}, {"language", n.language}, {"nodes", nodes}, {"edges", edges}};
}

json encode(const DomainTree& t) {
    json nodes = json::array();
    for (const auto& node : t.nodes)
        nodes.push_back({{"concept", node.concept_id},
                         {"parent", nullable(node.parent)},
                         {"depth", node.depth},
                         {"status", status_json(node.status)},
                         {"lemmas", node.lemmas},
                         {"children", node.children}});
    return {{"root", t.root},
            {"language", t.language},
            {"nodes", nodes},
            {"counts",
             {{"lexicalised", t.count(LexicalizationStatus::lexicalised)},
              {"gap", t.count(LexicalizationStatus::gap)},
              {"unknown", t.count(LexicalizationStatus::unknown)}}}};
}

json encode(const LanguageProfile& p) {
    return {{"language", encode(p.language)},
            {"counts",
             {{"senses", p.senses},
              {"distinct_lemmas", p.distinct_lemmas},
              {"gaps", p.gaps},
              {"intra_relations", p.intra_relations},
              {"cognate_relations", p.cognate_relations},
              {"relations", p.relations()}}}};
}

json encode_lexicalisations(const std::string& concept_id, const std::map<std::string, LexicalisationEntry>& entries) {
    json languages = json::object();
    for (const auto& [code, e] : entries)
        languages[code] = {{"status", status_json(e.status)}, {"lemmas", e.lemmas}, {"on_map", e.on_map}};
    return {{"concept", concept_id}, {"languages", languages}};
}

json encode(const analytics::CognateClustering& c, const Store& store) {
    json clusters = json::array();
    for (const auto& members : c.clusters) {
        json cluster = json::array();
        for (const auto& id : members) {
            const Sense* s = store.find_sense(id);
            cluster.push_back({{"sense", id}, {"language", s ? s->language : ""}, {"lemma", s ? s->lemma : ""}});
        }
        clusters.push_back(cluster);
    }
    return {{"concept", c.concept_id},
            {"clusters", clusters},
            {"language_cluster", c.language_cluster},
            {"ambiguous", c.ambiguous}};
}

json encode(const std::string& concept_id, const analytics::Diversity& d) {
    return {{"concept", concept_id}, {"index", d.index}, {"languages", d.languages}, {"clusters", d.clusters}};
}

json encode(const analytics::SimilarityRecord& r) {
    return {{"lang_a", r.lang_a},
            {"lang_b", r.lang_b},
            {"score", r.score},
            {"overlap", r.overlap},
            {"cognate_overlap", r.cognate_overlap}};
}

json encode(const layout::LayoutParams& p) {
    return {{"k_r", p.k_r},   {"k_g", p.k_g},           {"delta", p.delta},       {"tau", p.tau},
            {"speed", p.speed}, {"max_step", p.max_step}, {"adaptive", p.adaptive}, {"seed", p.seed}};
}

json encode(const ingest::IngestReport& r) {
    json rejected = json::array();
    for (const auto& x : r.rejected)
        rejected.push_back(
            {{"file", x.where.file}, {"line", x.where.line}, {"rule", x.rule}, {"detail", x.detail}, {"raw", x.where.raw}});
    json conflicts = json::array();
    for (const auto& x : r.conflicts)
        conflicts.push_back({{"file", x.where.file},
                             {"line", x.where.line},
                             {"record", x.record},
                             {"resolution", x.resolution}});
    return {{"accepted", r.accepted}, {"rejected", rejected}, {"conflicts", conflicts}};
}

json encode_layout(const layout::SimilarityGraph& g, const layout::LayoutResult& result, const Store& store) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json node = {{"code", g.nodes[i]},
                     {"x", result.positions[i].x},
                     {"y", result.positions[i].y},
                     {"degree", g.degree[i]}};
        const LanguageDescriptor* l = store.find_language(g.nodes[i]);
        node["phylum"] = l ? nullable(l->phylum) : json(nullptr);
        node["latitude"] = l ? nullable(l->latitude) : json(nullptr);
        node["longitude"] = l ? nullable(l->longitude) : json(nullptr);
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"a", g.nodes[e.i]}, {"b", g.nodes[e.j]}, {"weight", e.weight}});
    return {{"nodes", nodes},
            {"edges", edges},
            {"iterations", result.iterations},
            {"converged", result.converged}};
}

json error_envelope(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace lexdiv::json
