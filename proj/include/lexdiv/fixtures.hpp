#pragma once
// Canonical fixture data sets, kept as TSV text so they exercise the same
// ingestion path as real data.
//
//   F1 "rice/fish": six languages, four concepts, eight senses, two gaps,
//      three cognate pairs.
//   F2 "cousins": a 67-concept kinship subtree. English lexicalises only the
//      root and records gaps for the 66 descendants; the synthetic language
//      `dra` lexicalises 16 descendants; `drb` lexicalises the other 50 so
//      that every concept has at least one sense.

#include "lexdiv/ingest.hpp"
#include "lexdiv/store.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace lexdiv::fixtures {

// File stem (e.g. "senses") -> TSV content.
using Files = std::map<std::string, std::string>;

Files f1();
Files f2();
// Concatenates the files of both sets, stem by stem.
Files combine(const Files& a, const Files& b);

ingest::Batch to_batch(const Files& files);
Store load(const Files& files);

inline Store f1_store() { return load(f1()); }
inline Store f1_f2_store() { return load(combine(f1(), f2())); }

void write_dir(const Files& files, const std::filesystem::path& dir);

}  // namespace lexdiv::fixtures
