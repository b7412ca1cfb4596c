#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/query.hpp"
#include "neutro/relation.hpp"

namespace neutro {

// Relation document format (line oriented, UTF-8, `#` starts a comment):
//   scheme: X{a,b,c} Y{a,b,c}
//   row: a,b | 0.3, 0.7
// Domains are declared, never inferred. A tuple may repeat across rows to
// carry several pairs; unlisted tuples mean ⟨0,0⟩. Grades are decimals or
// fractions "p/q".

NeutrosophicRelation parse_relation_document(std::string_view text);
NeutrosophicRelation load_relation(const std::filesystem::path& path);

/// Canonical document: rows in tuple-space order, pairs ascending, grades as
/// shortest exact decimal or "p/q". Byte-stable for equal relations.
std::string relation_document(const NeutrosophicRelation& r);
void save_relation(const NeutrosophicRelation& r, const std::filesystem::path& path);

/// Hash of the canonical scheme rendering, hex-printed; detects a relation
/// file drifting away from the scheme it was cataloged with.
std::string scheme_digest(const Scheme& scheme);

struct CatalogEntry {
  std::string name;
  std::string path;  // relative paths resolve against the manifest directory
  std::string digest;
};

/// On-disk catalog: a JSON manifest listing named relation files.
struct CatalogManifest {
  std::vector<CatalogEntry> entries;

  static CatalogManifest load(const std::filesystem::path& path);
  /// Missing file yields an empty manifest.
  static CatalogManifest load_or_empty(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const CatalogEntry* find(std::string_view name) const;
  void upsert(CatalogEntry entry);
};

/// Loads every cataloged relation, verifying each file still matches its
/// recorded scheme digest.
Catalog open_catalog(const CatalogManifest& manifest, const std::filesystem::path& base_dir);

}  // namespace neutro
