#include "neutro/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "neutro/error.hpp"

namespace neutro {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_symbol(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '{' || c == '}' || c == ',' || c == '|' || c == '#') return false;
  }
  return true;
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.emplace_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Scheme parse_scheme_line(std::string_view body, int line) {
  std::vector<Attribute> attrs;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size()) break;
    const std::size_t brace = body.find('{', i);
    if (brace == std::string_view::npos)
      parse_fail(line, "expected ATTRIBUTE{v1,v2,...} in scheme declaration");
    const std::string name(trim(body.substr(i, brace - i)));
    if (!valid_symbol(name)) parse_fail(line, "invalid attribute name '" + name + "'");
    const std::size_t close = body.find('}', brace);
    if (close == std::string_view::npos)
      parse_fail(line, "missing '}' in domain of attribute " + name);
    std::vector<std::string> values = split_commas(body.substr(brace + 1, close - brace - 1));
    for (const auto& v : values) {
      if (!valid_symbol(v)) parse_fail(line, "invalid domain value '" + v + "'");
    }
    attrs.push_back(Attribute{name, AttributeDomain(std::move(values))});
    i = close + 1;
  }
  if (attrs.empty()) parse_fail(line, "scheme declares no attributes");
  return Scheme(std::move(attrs));
}

}  // namespace

NeutrosophicRelation parse_relation_document(std::string_view text) {
  std::optional<Scheme> scheme;
  std::map<Tuple, PairSet> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("scheme:")) {
      if (scheme) parse_fail(line_no, "duplicate scheme declaration");
      scheme = parse_scheme_line(line.substr(7), line_no);
      continue;
    }
    if (line.starts_with("row:")) {
      if (!scheme) parse_fail(line_no, "row before scheme declaration");
      const std::string_view body = line.substr(4);
      const std::size_t bar = body.find('|');
      if (bar == std::string_view::npos) parse_fail(line_no, "row is missing '|'");
      const std::vector<std::string> values = split_commas(trim(body.substr(0, bar)));
      const std::vector<std::string> grades = split_commas(trim(body.substr(bar + 1)));
      if (grades.size() != 2)
        parse_fail(line_no, "expected 'belief, doubt' after '|', got " +
                                std::to_string(grades.size()) + " value(s)");
      Tuple t = scheme->tuple_of(values);
      const ConfidencePair pair{Grade::parse(grades[0]), Grade::parse(grades[1])};
      rows[t].push_back(pair);  // duplicate identical rows collapse in canonicalization
      continue;
    }
    parse_fail(line_no, "expected 'scheme:' or 'row:'");
  }
  if (!scheme) fail(ErrorKind::ParseError, "document has no scheme declaration");
  return NeutrosophicRelation(*scheme, std::move(rows));
}

NeutrosophicRelation load_relation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_relation_document(buffer.str());
  } catch (const NeutroError& e) {
    throw NeutroError(e.kind(), path.string() + ": " + e.what());
  }
}

std::string relation_document(const NeutrosophicRelation& r) {
  std::string out = "scheme: " + r.scheme().str() + "\n";
  for (const auto& [t, pairs] : r.rows()) {
    for (const auto& p : pairs) {
      out += "row: " + r.scheme().tuple_text(t) + " | " + p.belief.str() + ", " + p.doubt.str() +
             "\n";
    }
  }
  return out;
}

void save_relation(const NeutrosophicRelation& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << relation_document(r);
  if (!out.flush()) fail(ErrorKind::IoError, "failed writing " + path.string());
}

std::string scheme_digest(const Scheme& scheme) {
  // FNV-1a over the canonical scheme rendering.
  const std::string text = scheme.str();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CatalogManifest CatalogManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open catalog manifest " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, "catalog manifest " + path.string() + ": " + e.what());
  }
  CatalogManifest manifest;
  if (!doc.is_object() || !doc.contains("relations") || !doc["relations"].is_array())
    fail(ErrorKind::ParseError,
         "catalog manifest " + path.string() + ": expected {\"relations\": [...]}");
  for (const auto& entry : doc["relations"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("path") ||
        !entry.contains("digest"))
      fail(ErrorKind::ParseError, "catalog manifest " + path.string() +
                                      ": each relation needs name, path, and digest");
    CatalogEntry e{entry["name"].get<std::string>(), entry["path"].get<std::string>(),
                   entry["digest"].get<std::string>()};
    if (manifest.find(e.name))
      fail(ErrorKind::ParseError,
           "catalog manifest " + path.string() + ": duplicate relation '" + e.name + "'");
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

CatalogManifest CatalogManifest::load_or_empty(const std::filesystem::path& path) {
  return std::filesystem::exists(path) ? load(path) : CatalogManifest{};
}

void CatalogManifest::save(const std::filesystem::path& path) const {
  nlohmann::json doc;
  doc["relations"] = nlohmann::json::array();
  for (const auto& e : entries) {
    doc["relations"].push_back({{"name", e.name}, {"path", e.path}, {"digest", e.digest}});
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << doc.dump(2) << "\n";
  if (!out.flush()) fail(ErrorKind::IoError, "failed writing " + path.string());
}

const CatalogEntry* CatalogManifest::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void CatalogManifest::upsert(CatalogEntry entry) {
  for (auto& e : entries) {
    if (e.name == entry.name) {
      e = std::move(entry);
      return;
    }
  }
  entries.push_back(std::move(entry));
}

Catalog open_catalog(const CatalogManifest& manifest, const std::filesystem::path& base_dir) {
  Catalog catalog;
  for (const auto& entry : manifest.entries) {
    std::filesystem::path p(entry.path);
    if (p.is_relative()) p = base_dir / p;
    NeutrosophicRelation r = load_relation(p);
    if (scheme_digest(r.scheme()) != entry.digest)
      fail(ErrorKind::IoError, "relation '" + entry.name + "' in " + p.string() +
                                   " no longer matches its cataloged scheme digest");
    catalog.emplace(entry.name, std::move(r));
  }
  return catalog;
}

}  // namespace neutro
