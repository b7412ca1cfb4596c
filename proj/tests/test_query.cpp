#include <doctest.h>

#include <random>

#include "neutro/error.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/io.hpp"
#include "neutro/query.hpp"
#include "testutil.hpp"

using namespace neutro;
namespace tu = neutro::testutil;

namespace {

Catalog example_catalog() {
  Catalog catalog;
  const Scheme xy = tu::scheme({{"X", {"a", "b", "c"}}, {"Y", {"a", "b", "c"}}});
  const Scheme yz = tu::scheme({{"Y", {"a", "b", "c"}}, {"Z", {"a", "b", "c"}}});
  catalog.emplace("R", tu::rel(xy, {{{"a", "a"}, "0", "1"},
                                    {{"a", "b"}, "0", "1"},
                                    {{"a", "c"}, "0", "1"},
                                    {{"b", "b"}, "1", "0"},
                                    {{"b", "c"}, "1", "0"},
                                    {{"c", "b"}, "1", "1"}}));
  catalog.emplace("S", tu::rel(yz, {{{"a", "c"}, "1", "0"},
                                    {{"b", "a"}, "1", "1"},
                                    {{"c", "b"}, "0", "1"}}));
  return catalog;
}

// Random well-formed query trees for the round-trip suites.
ExprPtr random_expr(std::mt19937_64& rng, int depth);

FormulaPtr random_formula(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> attrs = {"X", "Y", "Z", "W"};
  static const std::vector<std::string> lits = {"a", "b", "c"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  std::uniform_int_distribution<std::size_t> attr(0, attrs.size() - 1);
  std::uniform_int_distribution<std::size_t> lit(0, lits.size() - 1);
  switch (pick(rng)) {
    case 0: return make_eq_const(attrs[attr(rng)], lits[lit(rng)]);
    case 1: return make_eq_attr(attrs[attr(rng)], attrs[attr(rng)]);
    case 2: return make_not(random_formula(rng, depth - 1));
    case 3: return make_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return make_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> names = {"R", "S", "T1", "Data"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 8);
  std::uniform_int_distribution<std::size_t> name(0, names.size() - 1);
  switch (pick(rng)) {
    case 0: return make_ref(names[name(rng)]);
    case 1: return make_union(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 2: return make_intersect(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 3: return make_minus(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 4: return make_join(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return make_complement(random_expr(rng, depth - 1));
    case 6: {
      std::vector<std::string> attrs = {"X", "Z"};
      if (std::uniform_int_distribution<int>(0, 1)(rng)) attrs = {"Y"};
      return make_project(std::move(attrs), random_expr(rng, depth - 1));
    }
    case 7: return make_select(random_formula(rng, 2), random_expr(rng, depth - 1));
    default:
      return std::uniform_int_distribution<int>(0, 1)(rng)
                 ? make_split(random_expr(rng, depth - 1))
                 : make_combine(random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_SUITE("query") {

TEST_CASE("parsing the split-join-combine pipeline") {
  const ExprPtr e = parse_query("COMBINE(SPLIT(R) JOIN SPLIT(S))");
  const auto* combine_node = std::get_if<CombineNode>(&e->node);
  REQUIRE(combine_node);
  const auto* join = std::get_if<JoinNode>(&combine_node->inner->node);
  REQUIRE(join);
  const auto* ls = std::get_if<SplitNode>(&join->left->node);
  const auto* rs = std::get_if<SplitNode>(&join->right->node);
  REQUIRE(ls);
  REQUIRE(rs);
  CHECK(std::get<RefNode>(ls->inner->node).name == "R");
  CHECK(std::get<RefNode>(rs->inner->node).name == "S");
}

TEST_CASE("parsing a selection with a negated atom") {
  const ExprPtr e = parse_query("SELECT[NOT(X = Z)](T2)");
  const auto* select = std::get_if<SelectNode>(&e->node);
  REQUIRE(select);
  const auto* neg = std::get_if<FormulaNot>(&select->formula->node);
  REQUIRE(neg);
  const auto* atom = std::get_if<AttrEqAttr>(&neg->inner->node);
  REQUIRE(atom);
  CHECK(atom->left == "X");
  CHECK(atom->right == "Z");
  CHECK(std::get<RefNode>(select->inner->node).name == "T2");
}

TEST_CASE("UNION binds weaker than INTERSECT") {
  const ExprPtr e = parse_query("A UNION B INTERSECT C");
  const auto* u = std::get_if<UnionNode>(&e->node);
  REQUIRE(u);
  CHECK(std::get<RefNode>(u->left->node).name == "A");
  const auto* i = std::get_if<IntersectNode>(&u->right->node);
  REQUIRE(i);
  CHECK(std::get<RefNode>(i->left->node).name == "B");
  CHECK(std::get<RefNode>(i->right->node).name == "C");
}

TEST_CASE("binary operators are left-associative") {
  CHECK(query_equal(*parse_query("A UNION B UNION C"),
                    *make_union(make_union(make_ref("A"), make_ref("B")), make_ref("C"))));
  CHECK(query_equal(*parse_query("A INTERSECT B MINUS C"),
                    *make_minus(make_intersect(make_ref("A"), make_ref("B")), make_ref("C"))));
}

TEST_CASE("NOT at expression level is complement and binds tightest") {
  CHECK(query_equal(*parse_query("NOT A JOIN B"),
                    *make_join(make_complement(make_ref("A")), make_ref("B"))));
  CHECK(query_equal(*parse_query("NOT (A JOIN B)"),
                    *make_complement(make_join(make_ref("A"), make_ref("B")))));
}

TEST_CASE("identifiers may carry hyphens and underscores") {
  const ExprPtr e = parse_query("PROJECT[Object-id,Object](Radar_Data JOIN RadarRules)");
  const auto* p = std::get_if<ProjectNode>(&e->node);
  REQUIRE(p);
  CHECK(p->attrs == std::vector<std::string>{"Object-id", "Object"});
}

TEST_CASE("syntax errors carry position and expectations") {
  try {
    parse_query("A UNION");
    FAIL("expected a syntax error");
  } catch (const QuerySyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
    CHECK(!e.expected().empty());
  }
  try {
    parse_query("SELECT[X =](R)");
    FAIL("expected a syntax error");
  } catch (const QuerySyntaxError& e) {
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_query("PROJECT[X,X](R)"), QuerySyntaxError);
  CHECK_THROWS_AS(parse_query("A %% B"), QuerySyntaxError);
  CHECK_THROWS_AS(parse_query("SELECT[X = 'a](R)"), QuerySyntaxError);
  CHECK_THROWS_AS(parse_query("(A UNION B"), QuerySyntaxError);
  CHECK_THROWS_AS(parse_query(""), QuerySyntaxError);
}

TEST_CASE("formatting uses minimal parentheses") {
  CHECK(format_query(*make_union(make_ref("A"), make_ref("B"))) == "A UNION B");
  CHECK(format_query(*make_union(make_union(make_ref("A"), make_ref("B")), make_ref("C"))) ==
        "A UNION B UNION C");
  CHECK(format_query(*make_union(make_ref("A"), make_union(make_ref("B"), make_ref("C")))) ==
        "A UNION (B UNION C)");
  CHECK(format_query(*make_intersect(make_ref("A"), make_minus(make_ref("B"), make_ref("C")))) ==
        "A INTERSECT (B MINUS C)");
  CHECK(format_query(*make_join(make_complement(make_ref("A")), make_ref("B"))) ==
        "NOT A JOIN B");
  CHECK(format_query(*make_complement(make_join(make_ref("A"), make_ref("B")))) ==
        "NOT (A JOIN B)");
  CHECK(format_query(*make_select(make_not(make_eq_attr("X", "Z")), make_ref("T2"))) ==
        "SELECT[NOT(X = Z)](T2)");
  CHECK(format_query(*make_select(
            make_or(make_eq_const("X", "a"),
                    make_and(make_eq_attr("X", "Z"), make_eq_const("Z", "b"))),
            make_ref("R"))) == "SELECT[X = 'a' OR X = Z AND Z = 'b'](R)");
}

TEST_CASE("parse of format is the identity on random queries") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const ExprPtr e = random_expr(rng, 5);
    const std::string text = format_query(*e);
    CAPTURE(text);
    const ExprPtr reparsed = parse_query(text);
    CHECK(query_equal(*e, *reparsed));
    CHECK(format_query(*reparsed) == text);
  }
}

TEST_CASE("scheme inference mirrors the operators") {
  const Catalog catalog = example_catalog();
  CHECK(infer_scheme(*parse_query("R JOIN S"), catalog).str() ==
        "X{a,b,c} Y{a,b,c} Z{a,b,c}");
  CHECK(infer_scheme(*parse_query("PROJECT[X,Z](R JOIN S)"), catalog).str() ==
        "X{a,b,c} Z{a,b,c}");
  CHECK(infer_scheme(*parse_query("NOT R"), catalog) == catalog.at("R").scheme());
  CHECK(infer_scheme(*parse_query("SPLIT(R)"), catalog) == catalog.at("R").scheme());
  CHECK_THROWS_AS(infer_scheme(*parse_query("R UNION S"), catalog), NeutroError);
  CHECK_THROWS_AS(infer_scheme(*parse_query("R UNION Bogus"), catalog), NeutroError);
  CHECK_THROWS_AS(infer_scheme(*parse_query("PROJECT[Q](R)"), catalog), NeutroError);
  CHECK_THROWS_AS(infer_scheme(*parse_query("SELECT[Q = 'a'](R)"), catalog), NeutroError);
}

TEST_CASE("evaluation scheme equals the inferred scheme") {
  const Catalog catalog = example_catalog();
  for (const char* q : {"R JOIN S", "PROJECT[X,Z](R JOIN S)", "NOT R", "COMBINE(SPLIT(R))",
                        "SELECT[NOT(X = Y)](R)"}) {
    const ExprPtr e = parse_query(q);
    CHECK(evaluate(*e, catalog).scheme() == infer_scheme(*e, catalog));
  }
}

TEST_CASE("robust evaluation reproduces the bundled tables") {
  const Catalog catalog = example_catalog();
  const auto t1 = evaluate(*parse_query("R JOIN S"), catalog);
  CHECK(relation_document(t1) == fixtures::text("example2_T1"));
  const auto t3 = evaluate(*parse_query("SELECT[NOT(X = Z)](PROJECT[X,Z](R JOIN S))"), catalog);
  CHECK(relation_document(t3) == fixtures::text("example2_T3"));
}

TEST_CASE("raw and robust modes agree on consistent functional inputs") {
  std::mt19937_64 rng(67);
  const Scheme s = tu::scheme({{"X", {"a", "b", "c"}}});
  for (int i = 0; i < 100; ++i) {
    Catalog catalog;
    catalog.emplace("A", tu::random_consistent_functional(rng, s));
    catalog.emplace("B", tu::random_consistent_functional(rng, s));
    for (const char* q : {"A UNION B", "A INTERSECT B", "A MINUS B", "NOT A", "A JOIN B",
                          "PROJECT[X](A)", "SELECT[X = 'a'](A)"}) {
      const ExprPtr e = parse_query(q);
      EvalOptions raw;
      raw.mode = EvalMode::raw;
      CHECK(evaluate(*e, catalog) == evaluate(*e, catalog, raw));
    }
  }
}

TEST_CASE("raw projection over a split operand is rejected") {
  Catalog catalog;
  const Scheme s = tu::scheme({{"X", {"a", "b"}}, {"Y", {"a", "b"}}});
  catalog.emplace("A", tu::rel(s, {{{"a", "a"}, "0.9", "0.8"}}));
  EvalOptions raw;
  raw.mode = EvalMode::raw;
  CHECK_THROWS_WITH_AS(evaluate(*parse_query("PROJECT[X](SPLIT(A))"), catalog, raw),
                       doctest::Contains("not functional"), NeutroError);
  CHECK_NOTHROW(evaluate(*parse_query("PROJECT[X](SPLIT(A))"), catalog));
}

TEST_CASE("explicit split and combine are honored verbatim in both modes") {
  Catalog catalog;
  const Scheme s = tu::scheme({{"X", {"a"}}});
  catalog.emplace("A", tu::rel(s, {{{"a"}, "0.9", "0.8"}}));
  for (const EvalMode mode : {EvalMode::raw, EvalMode::robust}) {
    EvalOptions options;
    options.mode = mode;
    const auto split_only = evaluate(*parse_query("SPLIT(A)"), catalog, options);
    CHECK(split_only.pairs_at(s.tuple_of({"a"})).size() == 2);
    const auto round = evaluate(*parse_query("COMBINE(SPLIT(A))"), catalog, options);
    CHECK(round == catalog.at("A"));
  }
}

}  // TEST_SUITE
