#include "lexdiv/analytics.hpp"
#include "lexdiv/export.hpp"
#include "lexdiv/fixtures.hpp"
#include "lexdiv/ingest.hpp"
#include "lexdiv/json.hpp"
#include "lexdiv/layout.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace lexdiv;

namespace {

// Structured results cross the boundary as plain dicts and lists.
py::object to_python(const nlohmann::json& value) {
    return py::module_::import("json").attr("loads")(value.dump());
}

py::dict counts(const Store& s) {
    py::dict d;
    d["sources"] = s.sources().size();
    d["languages"] = s.languages().size();
    d["concepts"] = s.concepts().size();
    d["concept_relations"] = s.concept_relations().size();
    d["senses"] = s.senses().size();
    d["gaps"] = s.gaps().size();
    d["cognates"] = s.cognates().size();
    d["intra_relations"] = s.intra_relations().size();
    return d;
}

std::vector<ConceptRelationKind> parse_kinds(const std::optional<std::vector<std::string>>& names) {
    if (!names) return all_concept_relation_kinds();
    std::vector<ConceptRelationKind> out;
    for (const auto& name : *names) {
        auto kind = parse_concept_relation_kind(name);
        if (!kind) throw Error(errc::invalid_argument, "unknown relation kind '" + name + "'");
        out.push_back(*kind);
    }
    return out;
}

py::dict load(const std::filesystem::path& dir, bool use_cache) {
    ingest::LoadResult result;
    {
        py::gil_scoped_release release;
        result = ingest::load_data_dir(dir, use_cache);
    }
    py::list violations;
    for (const auto& v : result.violations) violations.append(to_python(json::encode(v)));
    py::dict out;
    out["report"] = to_python(json::encode(result.report));
    out["violations"] = violations;
    out["from_cache"] = result.from_cache;
    out["clean"] = result.clean();
    out["store"] = std::move(result.store);
    return out;
}

std::string export_raw(const Store& s, const std::string& kind, std::size_t min_overlap) {
    auto parsed = exports::parse_raw_kind(kind);
    if (!parsed) throw Error(errc::invalid_argument, "unknown raw dataset '" + kind + "'");
    std::ostringstream out;
    exports::export_raw(s, *parsed, out, min_overlap);
    return out.str();
}

std::string export_lexicon(const Store& s, const std::string& language, const std::string& format) {
    auto parsed = exports::parse_lexicon_format(format);
    if (!parsed) throw Error(errc::invalid_argument, "format must be lmf or tsv");
    std::ostringstream out;
    exports::export_lexicon(s, language, *parsed, out);
    return out.str();
}

std::string export_lexicon_set(const Store& s, const std::vector<std::string>& languages) {
    std::ostringstream out;
    exports::export_lexicon_set(s, languages, out);
    return out.str();
}

py::dict run_layout(const Store& s, std::size_t min_overlap, double threshold, std::uint64_t seed,
                std::size_t iterations, double eps, bool adaptive, double repulsion, double gravity) {
    layout::LayoutParams params;
    params.seed = seed;
    params.adaptive = adaptive;
    params.k_r = repulsion;
    params.k_g = gravity;
    std::vector<std::string> languages;
    for (const auto& [code, lang] : s.languages()) languages.push_back(code);
    nlohmann::json body;
    {
        py::gil_scoped_release release;
        auto graph = layout::build_graph(analytics::similarity_matrix(s, min_overlap), threshold, languages);
        auto result = layout::run(graph, params, iterations, eps);
        body = json::encode_layout(graph, result, s);
    }
    return to_python(body);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lexical diversity catalogue: ingest, queries, analytics, layout and export.";

    // Never released: the type must outlive interpreter teardown.
    static PyObject* error = PyErr_NewException("lexdiv._core.LexdivError", PyExc_RuntimeError, nullptr);
    m.add_object("LexdivError", py::handle(error));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error, py::make_tuple(e.code(), e.what()).ptr());
        }
    });

    py::class_<Store>(m, "Store")
        .def(py::init<>())
        .def("counts", &counts)
        .def("languages", [](const Store& s) {
            py::list out;
            for (const auto& [code, lang] : s.languages()) out.append(to_python(json::encode(lang)));
            return out;
        })
        .def("concept", [](const Store& s, const std::string& id) -> py::object {
            const Concept* c = s.find_concept(id);
            if (!c) return py::none();
            return to_python(json::encode(*c));
        })
        .def("validate", [](const Store& s) {
            py::list out;
            for (const auto& v : s.validate()) out.append(to_python(json::encode(v)));
            return out;
        })
        .def("status", [](const Store& s, const std::string& language, const std::string& concept_id) {
            return std::string(to_string(s.status(language, concept_id)));
        }, py::arg("language"), py::arg("concept"))
        .def("lookup_word", [](const Store& s, const std::string& language, const std::string& lemma) {
            py::list out;
            for (const auto& match : s.lookup_word(language, lemma)) out.append(to_python(json::encode(match)));
            return out;
        }, py::arg("language"), py::arg("lemma"))
        .def("concept_lexicalisations", [](const Store& s, const std::string& id) {
            return to_python(json::encode_lexicalisations(id, s.concept_lexicalisations(id)));
        }, py::arg("concept"))
        .def("neighborhood", [](const Store& s, const std::string& id, const std::string& language, int depth,
                                const std::optional<std::vector<std::string>>& kinds) {
            return to_python(json::encode(s.neighborhood(id, language, depth, parse_kinds(kinds))));
        }, py::arg("concept"), py::arg("language"), py::arg("depth") = 1, py::arg("kinds") = py::none())
        .def("domain_tree", [](const Store& s, const std::string& root, const std::string& language) {
            return to_python(json::encode(s.domain_tree(root, language)));
        }, py::arg("root"), py::arg("language"))
        .def("language_profile", [](const Store& s, const std::string& code) {
            return to_python(json::encode(s.language_profile(code)));
        }, py::arg("language"))
        .def("save_snapshot", [](const Store& s, const std::filesystem::path& path) { save_snapshot(s, path); })
        .def_static("load_snapshot", [](const std::filesystem::path& path) { return load_snapshot(path); })
        .def("__eq__", [](const Store& a, const Store& b) { return a == b; })
        .def("__repr__", [](const Store& s) {
            return "<lexdiv.Store languages=" + std::to_string(s.languages().size()) +
                   " concepts=" + std::to_string(s.concepts().size()) +
                   " senses=" + std::to_string(s.senses().size()) + ">";
        });

    m.def("load_data_dir", &load, py::arg("data_dir"), py::arg("use_cache") = false,
          "Ingest a data directory; returns a dict with store, report, violations, from_cache and clean.");
    m.def("fixture_store", [](const std::string& set) {
        if (set == "f1") return fixtures::f1_store();
        if (set == "all") return fixtures::f1_f2_store();
        throw Error(errc::invalid_argument, "fixture set must be f1 or all");
    }, py::arg("set") = "all");
    m.def("write_fixtures", [](const std::filesystem::path& dir, const std::string& set) {
        if (set == "f1") fixtures::write_dir(fixtures::f1(), dir);
        else if (set == "f2") fixtures::write_dir(fixtures::f2(), dir);
        else if (set == "all") fixtures::write_dir(fixtures::combine(fixtures::f1(), fixtures::f2()), dir);
        else throw Error(errc::invalid_argument, "fixture set must be f1, f2 or all");
    }, py::arg("dir"), py::arg("set") = "all");

    m.def("cognate_clusters", [](const Store& s, const std::string& id) {
        return to_python(json::encode(analytics::cognate_clusters(s, id), s));
    }, py::arg("store"), py::arg("concept"));
    m.def("diversity_index", [](const Store& s, const std::string& id) {
        return to_python(json::encode(id, analytics::diversity_index(s, id)));
    }, py::arg("store"), py::arg("concept"));
    m.def("lexicon_similarity", [](const Store& s, const std::string& a, const std::string& b,
                                   std::size_t min_overlap) -> py::object {
        auto r = analytics::lexicon_similarity(s, a, b, min_overlap);
        if (!r) return py::none();
        return to_python(json::encode(*r));
    }, py::arg("store"), py::arg("lang_a"), py::arg("lang_b"), py::arg("min_overlap") = analytics::kDefaultMinOverlap);
    m.def("similarity_matrix", [](const Store& s, std::size_t min_overlap) {
        py::list out;
        for (const auto& r : analytics::similarity_matrix(s, min_overlap)) out.append(to_python(json::encode(r)));
        return out;
    }, py::arg("store"), py::arg("min_overlap") = analytics::kDefaultMinOverlap);

    m.def("layout", &run_layout, py::arg("store"), py::arg("min_overlap") = analytics::kDefaultMinOverlap,
          py::arg("threshold") = 0.0, py::arg("seed") = 42, py::arg("iterations") = 500, py::arg("eps") = 1e-4,
          py::arg("adaptive") = false, py::arg("repulsion") = 1.0, py::arg("gravity") = 1.0);

    m.def("export_raw", &export_raw, py::arg("store"), py::arg("kind"),
          py::arg("min_overlap") = analytics::kDefaultMinOverlap);
    m.def("export_lexicon", &export_lexicon, py::arg("store"), py::arg("language"), py::arg("format") = "lmf");
    m.def("export_lexicon_set", &export_lexicon_set, py::arg("store"), py::arg("languages"));
}
