#include "lexdiv/fixtures.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace lexdiv::fixtures {

Files f1() {
    Files f;
    f["sources"] =
        "# source_id\tlicense\tredistributable\n"
        "f1\tCC-BY-4.0\t1\n";
    f["languages"] =
        "# code\tname\tphylum\tlat\tlon\n"
        "eng\tEnglish\tIndo-European\t52.0\t-1.0\n"
        "ita\tItalian\tIndo-European\t43.0\t12.0\n"
        "swa\tSwahili\tNiger-Congo\t-6.0\t35.0\n"
        "hun\tHungarian\tUralic\t47.0\t19.0\n"
        "fin\tFinnish\tUralic\t62.0\t25.0\n"
        "kan\tKannada\tDravidian\t14.0\t76.0\n";
    f["concepts"] =
        "# id\tpos\tgloss\tpwn30_id\tbroader\n"
        "rice-general\tnoun\tgrains of the rice plant, raw or cooked\t\t\n"
        "raw-rice\tnoun\traw, uncooked rice grains\t\trice-general\n"
        "cooked-rice\tnoun\trice that has been cooked\t\trice-general\n"
        "fish\tnoun\tany cold-blooded aquatic vertebrate with gills and fins\t\t\n";
    f["senses"] =
        "# language\tlemma\tconcept\tsource_id\n"
        "eng\trice\trice-general\tf1\n"
        "ita\triso\trice-general\tf1\n"
        "swa\ts-raw\traw-rice\tf1\n"
        "kan\ts-cooked\tcooked-rice\tf1\n"
        "eng\tfish\tfish\tf1\n"
        "ita\tpesce\tfish\tf1\n"
        "hun\thal\tfish\tf1\n"
        "fin\tkala\tfish\tf1\n";
    f["gaps"] =
        "# language\tconcept\tsource_id\n"
        "eng\traw-rice\tf1\n"
        "swa\trice-general\tf1\n";
    f["cognates"] =
        "# lang1\tlemma1\tconcept1\tlang2\tlemma2\tconcept2\tsource_id\n"
        "eng\trice\trice-general\tita\triso\trice-general\tf1\n"
        "eng\tfish\tfish\tita\tpesce\tfish\tf1\n"
        "hun\thal\tfish\tfin\tkala\tfish\tf1\n";
    return f;
}

Files f2() {
    constexpr std::array<const char*, 6> branches = {
        "cousin-pat-parallel", "cousin-pat-cross", "cousin-mat-parallel",
        "cousin-mat-cross",    "cousin-second",    "cousin-removed",
    };
    constexpr int leaves_per_branch = 10;
    // dra lexicalises leaves 1-4 of the four lineage branches.
    auto dra_has = [](std::size_t branch, int leaf) { return branch < 4 && leaf <= 4; };

    std::ostringstream concepts, senses, gaps;
    concepts << "# id\tpos\tgloss\tpwn30_id\tbroader\n";
    concepts << "cousin\tnoun\tthe child of one's aunt or uncle\t\t\n";
    senses << "# language\tlemma\tconcept\tsource_id\n";
    senses << "eng\tcousin\tcousin\tf2\n";
    gaps << "# language\tconcept\tsource_id\n";

    int dra_words = 0;
    int drb_words = 0;
    auto lexicalise = [&](const std::string& id, bool by_dra) {
        char lemma[32];
        if (by_dra) std::snprintf(lemma, sizeof lemma, "dra-w%02d", ++dra_words);
        else std::snprintf(lemma, sizeof lemma, "drb-w%02d", ++drb_words);
        senses << (by_dra ? "dra" : "drb") << '\t' << lemma << '\t' << id << "\tf2\n";
        gaps << "eng\t" << id << "\tf2\n";
    };

    for (std::size_t b = 0; b < branches.size(); ++b) {
        std::string branch = branches[b];
        concepts << branch << "\tnoun\tcousin subtype " << branch << "\t\tcousin\n";
        lexicalise(branch, false);
        for (int leaf = 1; leaf <= leaves_per_branch; ++leaf) {
            char suffix[8];
            std::snprintf(suffix, sizeof suffix, "-%02d", leaf);
            std::string id = branch + suffix;
            concepts << id << "\tnoun\tcousin subtype " << id << "\t\t" << branch << "\n";
            lexicalise(id, dra_has(b, leaf));
        }
    }

    Files f;
    f["sources"] =
        "# source_id\tlicense\tredistributable\n"
        "f2\tCC-BY-4.0\t1\n";
    f["languages"] =
        "# code\tname\tphylum\tlat\tlon\n"
        "eng\tEnglish\tIndo-European\t52.0\t-1.0\n"
        "dra\tDravidian A (synthetic)\tDravidian\t12.0\t78.0\n"
        "drb\tDravidian B (synthetic)\tDravidian\t11.0\t77.0\n";
    f["concepts"] = concepts.str();
    f["senses"] = senses.str();
    f["gaps"] = gaps.str();
    return f;
}

Files combine(const Files& a, const Files& b) {
    Files out = a;
    for (const auto& [stem, text] : b) out[stem] += text;
    return out;
}

ingest::Batch to_batch(const Files& files) {
    std::ostringstream bundle;
    for (const auto& [stem, text] : files) bundle << "#@ " << stem << "\n" << text;
    std::istringstream in(bundle.str());
    return ingest::parse_bundle(in, "fixture");
}

Store load(const Files& files) {
    Store store;
    ingest::merge(to_batch(files), store);
    return store;
}

void write_dir(const Files& files, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [stem, text] : files) {
        std::ofstream out(dir / (stem + ".tsv"), std::ios::trunc);
        if (!out) throw Error(errc::io, "cannot write " + (dir / (stem + ".tsv")).string());
        out << text;
    }
}

}  // namespace lexdiv::fixtures
