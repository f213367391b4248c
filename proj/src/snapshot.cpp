#include "lexdiv/store.hpp"

#include <cstring>
#include <fstream>

namespace lexdiv {

namespace {

constexpr char kMagic[4] = {'L', 'X', 'D', 'S'};

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void u32(std::uint32_t v) { out_.write(reinterpret_cast<const char*>(&v), sizeof v); }
    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
    void f64(double v) { out_.write(reinterpret_cast<const char*>(&v), sizeof v); }
    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }
    void opt_str(const std::optional<std::string>& s) {
        u8(s ? 1 : 0);
        if (s) str(*s);
    }
    void opt_f64(const std::optional<double>& v) {
        u8(v ? 1 : 0);
        if (v) f64(*v);
    }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    bool ok() const { return static_cast<bool>(in_); }

    std::uint32_t u32() {
        std::uint32_t v = 0;
        in_.read(reinterpret_cast<char*>(&v), sizeof v);
        return v;
    }
    std::uint8_t u8() {
        char c = 0;
        in_.get(c);
        return static_cast<std::uint8_t>(c);
    }
    double f64() {
        double v = 0;
        in_.read(reinterpret_cast<char*>(&v), sizeof v);
        return v;
    }
    std::string str() {
        std::uint32_t n = u32();
        if (!in_ || n > (1u << 24)) {
            in_.setstate(std::ios::failbit);
            return {};
        }
        std::string s(n, '\0');
        in_.read(s.data(), n);
        return s;
    }
    std::optional<std::string> opt_str() {
        if (u8()) return str();
        return std::nullopt;
    }
    std::optional<double> opt_f64() {
        if (u8()) return f64();
        return std::nullopt;
    }

private:
    std::istream& in_;
};

}  // namespace

void save_snapshot(const Store& store, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(errc::io, "cannot write snapshot " + path.string());
    out.write(kMagic, sizeof kMagic);
    Writer w(out);
    w.u32(kSnapshotVersion);

    w.u32(static_cast<std::uint32_t>(store.sources().size()));
    for (const auto& [id, p] : store.sources()) {
        w.str(p.source_id);
        w.str(p.license);
        w.u8(p.redistributable ? 1 : 0);
    }
    w.u32(static_cast<std::uint32_t>(store.languages().size()));
    for (const auto& [code, l] : store.languages()) {
        w.str(l.code);
        w.str(l.name);
        w.opt_str(l.phylum);
        w.opt_f64(l.latitude);
        w.opt_f64(l.longitude);
    }
    w.u32(static_cast<std::uint32_t>(store.concepts().size()));
    for (const auto& [id, c] : store.concepts()) {
        w.str(c.id);
        w.str(c.gloss);
        w.u8(static_cast<std::uint8_t>(c.pos));
        w.opt_str(c.pwn30_id);
        w.u8(c.interlingual ? 1 : 0);
    }
    w.u32(static_cast<std::uint32_t>(store.concept_relations().size()));
    for (const auto& r : store.concept_relations()) {
        w.str(r.source);
        w.str(r.target);
        w.u8(static_cast<std::uint8_t>(r.kind));
    }
    w.u32(static_cast<std::uint32_t>(store.senses().size()));
    for (const auto& [id, s] : store.senses()) {
        w.str(s.id);
        w.str(s.language);
        w.str(s.lemma);
        w.str(s.concept_id);
        w.str(s.source);
    }
    w.u32(static_cast<std::uint32_t>(store.gaps().size()));
    for (const auto& [key, g] : store.gaps()) {
        w.str(g.language);
        w.str(g.concept_id);
        w.str(g.source);
    }
    w.u32(static_cast<std::uint32_t>(store.cognates().size()));
    for (const auto& r : store.cognates()) {
        w.str(r.source);
        w.str(r.target);
        w.str(r.provenance);
    }
    w.u32(static_cast<std::uint32_t>(store.intra_relations().size()));
    for (const auto& r : store.intra_relations()) {
        w.str(r.kind.to_string());
        w.str(r.source);
        w.str(r.target);
        w.str(r.provenance);
    }
    if (!out) throw Error(errc::io, "failed writing snapshot " + path.string());
}

std::optional<Store> load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4] = {};
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) return std::nullopt;
    Reader r(in);
    if (r.u32() != kSnapshotVersion || !r.ok()) return std::nullopt;

    Store store;
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        Provenance p;
        p.source_id = r.str();
        p.license = r.str();
        p.redistributable = r.u8() != 0;
        store.put(std::move(p));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        LanguageDescriptor l;
        l.code = r.str();
        l.name = r.str();
        l.phylum = r.opt_str();
        l.latitude = r.opt_f64();
        l.longitude = r.opt_f64();
        store.put(std::move(l));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        Concept c;
        c.id = r.str();
        c.gloss = r.str();
        c.pos = static_cast<PartOfSpeech>(r.u8());
        c.pwn30_id = r.opt_str();
        c.interlingual = r.u8() != 0;
        store.put(std::move(c));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        ConceptRelation rel;
        rel.source = r.str();
        rel.target = r.str();
        rel.kind = static_cast<ConceptRelationKind>(r.u8());
        store.put(std::move(rel));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        Sense s;
        s.id = r.str();
        s.language = r.str();
        s.lemma = r.str();
        s.concept_id = r.str();
        s.source = r.str();
        store.put(std::move(s));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        LexicalGap g;
        g.language = r.str();
        g.concept_id = r.str();
        g.source = r.str();
        store.put(std::move(g));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        CrossLingualRelation rel;
        rel.source = r.str();
        rel.target = r.str();
        rel.provenance = r.str();
        store.put(std::move(rel));
    }
    for (std::uint32_t n = r.u32(); n-- > 0 && r.ok();) {
        IntraLingualRelation rel;
        rel.kind = IntraKind::parse(r.str());
        rel.source = r.str();
        rel.target = r.str();
        rel.provenance = r.str();
        store.put(std::move(rel));
    }
    if (!r.ok()) return std::nullopt;
    return store;
}

}  // namespace lexdiv
