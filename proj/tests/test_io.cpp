#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "neutro/error.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/io.hpp"
#include "testutil.hpp"

using namespace neutro;
namespace tu = neutro::testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("neutro_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parsing the bundled two-column relation") {
  const auto r = parse_relation_document(fixtures::text("example2_R"));
  CHECK(r.stored_count() == 6);
  CHECK(r.scheme().str() == "X{a,b,c} Y{a,b,c}");
  CHECK(!classify(r).consistent);
}

TEST_CASE("a grade above one is rejected") {
  CHECK_THROWS_WITH_AS(parse_relation_document("scheme: X{a}\nrow: a | 1.5, 0\n"),
                       doctest::Contains("grade out of range"), NeutroError);
}

TEST_CASE("repeated tuples accumulate a pair set") {
  const auto r = parse_relation_document(
      "scheme: T{a,b}\n"
      "row: a | 0.3, 0.7\n"
      "row: a | 0.4, 0.6\n");
  const auto pairs = r.pairs_at(r.scheme().tuple_of({"a"}));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == tu::cp("0.3", "0.7"));
  CHECK(pairs[1] == tu::cp("0.4", "0.6"));
}

TEST_CASE("identical repeated rows collapse") {
  const auto r = parse_relation_document(
      "scheme: T{a}\n"
      "row: a | 1, 0\n"
      "row: a | 1, 0\n");
  CHECK(r.pairs_at(r.scheme().tuple_of({"a"})).size() == 1);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto r = parse_relation_document(
      "# heading\n"
      "\n"
      "scheme: T{a}  # trailing\n"
      "row: a | 0.5, 0.5\n");
  CHECK(r.stored_count() == 1);
}

TEST_CASE("parse failures carry the offending line") {
  CHECK_THROWS_WITH_AS(parse_relation_document("row: a | 1, 0\n"),
                       doctest::Contains("row before scheme"), NeutroError);
  CHECK_THROWS_WITH_AS(parse_relation_document("scheme: X{a}\nscheme: Y{a}\n"),
                       doctest::Contains("line 2"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document("scheme: X{a}\nrow: a | 1\n"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document("scheme: X{a}\nrow: a, b | 1, 0\n"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document("scheme: X{}\n"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document("scheme: X{a} X{b}\n"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document("nonsense\n"), NeutroError);
  CHECK_THROWS_AS(parse_relation_document(""), NeutroError);
}

TEST_CASE("out-of-domain values are a domain violation") {
  CHECK_THROWS_WITH_AS(parse_relation_document("scheme: X{a,b}\nrow: z | 1, 0\n"),
                       doctest::Contains("domain violation"), NeutroError);
}

TEST_CASE("canonical document uses tuple-space order and shortest grades") {
  const Scheme s = tu::scheme({{"X", {"a", "b"}}});
  const auto r = tu::rel(s, {{{"b"}, "0.50", "0"}, {{"a"}, "2/4", "1"}});
  CHECK(relation_document(r) ==
        "scheme: X{a,b}\n"
        "row: a | 0.5, 1\n"
        "row: b | 0.5, 0\n");
}

TEST_CASE("non-terminating grades serialize as fractions") {
  const Scheme s = tu::scheme({{"X", {"a"}}});
  const auto r = tu::rel(s, {{{"a"}, "1/3", "0"}});
  CHECK(relation_document(r) ==
        "scheme: X{a}\n"
        "row: a | 1/3, 0\n");
  CHECK(parse_relation_document(relation_document(r)) == r);
}

TEST_CASE("an empty relation serializes to its scheme alone") {
  const NeutrosophicRelation r(tu::scheme({{"X", {"a", "b"}}}));
  CHECK(relation_document(r) == "scheme: X{a,b}\n");
  CHECK(parse_relation_document(relation_document(r)) == r);
}

TEST_CASE("save and load round-trip random relations") {
  TempDir dir;
  std::mt19937_64 rng(71);
  for (int i = 0; i < 50; ++i) {
    const Scheme s = tu::random_scheme(rng);
    const auto r = tu::random_functional_any(rng, s);
    const fs::path file = dir.path / "round.rel";
    save_relation(r, file);
    CHECK(load_relation(file) == r);
  }
}

TEST_CASE("serialization is byte-stable across equal relations") {
  const Scheme s = tu::scheme({{"X", {"a", "b"}}});
  std::map<Tuple, PairSet> forward;
  forward[s.tuple_of({"a"})] = {tu::cp("0.3", "0.7"), tu::cp("0.5", "0.5")};
  std::map<Tuple, PairSet> reversed;
  reversed[s.tuple_of({"a"})] = {tu::cp("0.5", "0.5"), tu::cp("0.3", "0.7"),
                                 tu::cp("0.3", "0.7")};
  const NeutrosophicRelation a(s, std::move(forward));
  const NeutrosophicRelation b(s, std::move(reversed));
  CHECK(a == b);
  CHECK(relation_document(a) == relation_document(b));
}

TEST_CASE("every bundled fixture file parses and matches its embedded copy") {
  for (const auto name : fixtures::names()) {
    const fs::path file = fs::path(NEUTRO_FIXTURE_DIR) / (std::string(name) + ".rel");
    CAPTURE(name);
    const auto from_file = load_relation(file);
    const auto embedded = parse_relation_document(fixtures::text(name));
    CHECK(from_file == embedded);
  }
}

TEST_CASE("catalog manifest round-trips and validates digests") {
  TempDir dir;
  const Scheme s = tu::scheme({{"X", {"a", "b"}}});
  const auto r = tu::rel(s, {{{"a"}, "1", "0"}});
  save_relation(r, dir.path / "r.rel");

  CatalogManifest manifest;
  manifest.upsert({"R", "r.rel", scheme_digest(r.scheme())});
  manifest.save(dir.path / "catalog.json");

  const auto loaded = CatalogManifest::load(dir.path / "catalog.json");
  REQUIRE(loaded.entries.size() == 1);
  CHECK(loaded.entries[0].name == "R");
  const Catalog catalog = open_catalog(loaded, dir.path);
  CHECK(catalog.at("R") == r);

  // Rewrite the file with a different scheme; the digest must catch it.
  save_relation(NeutrosophicRelation(tu::scheme({{"Y", {"a"}}})), dir.path / "r.rel");
  CHECK_THROWS_WITH_AS(open_catalog(loaded, dir.path), doctest::Contains("digest"), NeutroError);
}

TEST_CASE("manifest upsert replaces by name") {
  CatalogManifest manifest;
  manifest.upsert({"R", "one.rel", "d1"});
  manifest.upsert({"R", "two.rel", "d2"});
  REQUIRE(manifest.entries.size() == 1);
  CHECK(manifest.entries[0].path == "two.rel");
  CHECK(manifest.find("R"));
  CHECK(!manifest.find("S"));
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(load_relation("/nonexistent/file.rel"), NeutroError);
  CHECK_THROWS_AS(CatalogManifest::load("/nonexistent/catalog.json"), NeutroError);
  CHECK(CatalogManifest::load_or_empty("/nonexistent/catalog.json").entries.empty());
}

}  // TEST_SUITE
