#include "lexdiv/model.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <array>
#include <utility>

namespace lexdiv {

namespace {

constexpr std::array<std::pair<PartOfSpeech, std::string_view>, 5> kPos{{
    {PartOfSpeech::noun, "noun"},
    {PartOfSpeech::verb, "verb"},
    {PartOfSpeech::adjective, "adjective"},
    {PartOfSpeech::adverb, "adverb"},
    {PartOfSpeech::other, "other"},
}};

constexpr std::array<std::pair<ConceptRelationKind, std::string_view>, 4> kRelKinds{{
    {ConceptRelationKind::is_a, "is-a"},
    {ConceptRelationKind::part_of, "part-of"},
    {ConceptRelationKind::related, "related"},
    {ConceptRelationKind::metonymy_related, "metonymy-related"},
}};

constexpr std::array<std::pair<IntraKind::Tag, std::string_view>, 4> kIntraKinds{{
    {IntraKind::antonym, "antonym"},
    {IntraKind::derivation, "derivation"},
    {IntraKind::metonym_of, "metonym-of"},
    {IntraKind::homograph_of, "homograph-of"},
}};

}  // namespace

std::string_view to_string(PartOfSpeech pos) {
    for (const auto& [p, name] : kPos)
        if (p == pos) return name;
    return "other";
}

std::optional<PartOfSpeech> parse_pos(std::string_view token) {
    for (const auto& [p, name] : kPos)
        if (name == token) return p;
    return std::nullopt;
}

bool is_language_code(std::string_view code) {
    if (code.size() != 3) return false;
    for (char c : code)
        if (c < 'a' || c > 'z') return false;
    return true;
}

std::string_view to_string(ConceptRelationKind kind) {
    for (const auto& [k, name] : kRelKinds)
        if (k == kind) return name;
    return "related";
}

std::optional<ConceptRelationKind> parse_concept_relation_kind(std::string_view token) {
    for (const auto& [k, name] : kRelKinds)
        if (name == token) return k;
    return std::nullopt;
}

std::vector<ConceptRelationKind> all_concept_relation_kinds() {
    std::vector<ConceptRelationKind> out;
    for (const auto& [k, name] : kRelKinds) out.push_back(k);
    return out;
}

std::string make_sense_id(std::string_view language, std::string_view concept_id,
                          std::string_view lemma) {
    std::string id;
    id.reserve(language.size() + concept_id.size() + lemma.size() + 2);
    id.append(language).append(":").append(concept_id).append(":").append(lemma);
    return id;
}

IntraKind IntraKind::parse(std::string_view token) {
    for (const auto& [t, name] : kIntraKinds)
        if (name == token) return IntraKind{t, {}};
    return IntraKind{other, std::string(token)};
}

std::string IntraKind::to_string() const {
    for (const auto& [t, name] : kIntraKinds)
        if (t == tag) return std::string(name);
    return label;
}

CrossLingualRelation CrossLingualRelation::canonical(std::string a, std::string b,
                                                     std::string provenance) {
    if (b < a) std::swap(a, b);
    return CrossLingualRelation{std::move(a), std::move(b), std::move(provenance)};
}

std::string_view to_string(LexicalizationStatus status) {
    switch (status) {
        case LexicalizationStatus::lexicalised: return "lexicalised";
        case LexicalizationStatus::gap: return "gap";
        case LexicalizationStatus::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<std::string> normalize_lemma(std::string_view raw) {
    // Validate UTF-8 up front; ICU would otherwise substitute U+FFFD silently.
    const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
    const auto length = static_cast<int32_t>(raw.size());
    for (int32_t i = 0; i < length;) {
        UChar32 c;
        U8_NEXT(bytes, i, length, c);
        if (c < 0) return std::nullopt;
    }

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return std::nullopt;

    icu::UnicodeString text = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    icu::UnicodeString normalized = nfc->normalize(text, status);
    if (U_FAILURE(status)) return std::nullopt;

    int32_t begin = 0;
    int32_t end = normalized.length();
    while (begin < end) {
        UChar32 c = normalized.char32At(begin);
        if (!u_isUWhiteSpace(c)) break;
        begin += U16_LENGTH(c);
    }
    while (end > begin) {
        int32_t prev = normalized.moveIndex32(end, -1);
        if (!u_isUWhiteSpace(normalized.char32At(prev))) break;
        end = prev;
    }

    std::string out;
    normalized.tempSubStringBetween(begin, end).toUTF8String(out);
    return out;
}

}  // namespace lexdiv
