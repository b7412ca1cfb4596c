#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/algebra.hpp"
#include "neutro/formula.hpp"
#include "neutro/relation.hpp"

namespace neutro {

struct QueryExpr;
using ExprPtr = std::shared_ptr<const QueryExpr>;

struct RefNode {
  std::string name;
};
struct UnionNode {
  ExprPtr left, right;
};
struct IntersectNode {
  ExprPtr left, right;
};
struct MinusNode {
  ExprPtr left, right;
};
struct JoinNode {
  ExprPtr left, right;
};
struct ComplementNode {
  ExprPtr inner;
};
struct ProjectNode {
  std::vector<std::string> attrs;  // non-empty, duplicate-free
  ExprPtr inner;
};
struct SelectNode {
  FormulaPtr formula;
  ExprPtr inner;
};
struct SplitNode {
  ExprPtr inner;
};
struct CombineNode {
  ExprPtr inner;
};

struct QueryExpr {
  std::variant<RefNode, UnionNode, IntersectNode, MinusNode, JoinNode, ComplementNode,
               ProjectNode, SelectNode, SplitNode, CombineNode>
      node;
};

ExprPtr make_ref(std::string name);
ExprPtr make_union(ExprPtr l, ExprPtr r);
ExprPtr make_intersect(ExprPtr l, ExprPtr r);
ExprPtr make_minus(ExprPtr l, ExprPtr r);
ExprPtr make_join(ExprPtr l, ExprPtr r);
ExprPtr make_complement(ExprPtr e);
ExprPtr make_project(std::vector<std::string> attrs, ExprPtr e);
ExprPtr make_select(FormulaPtr f, ExprPtr e);
ExprPtr make_split(ExprPtr e);
ExprPtr make_combine(ExprPtr e);

bool query_equal(const QueryExpr& a, const QueryExpr& b);

/// Grammar (keywords case-sensitive upper-case):
///   expr  := union ;  union := inter ("UNION" inter)* ;
///   inter := joinE (("INTERSECT"|"MINUS") joinE)* ;
///   joinE := unary ("JOIN" unary)* ;
///   unary := "NOT" unary
///          | "PROJECT" "[" ident ("," ident)* "]" "(" expr ")"
///          | "SELECT" "[" formula "]" "(" expr ")"
///          | "SPLIT" "(" expr ")" | "COMBINE" "(" expr ")"
///          | ident | "(" expr ")" ;
///   formula := conj ("OR" conj)* ;  conj := atomF ("AND" atomF)* ;
///   atomF := "NOT" atomF | ident "=" (ident | "'" literal "'") | "(" formula ")".
/// NOT at expression level is complement; inside a formula it is logical
/// negation. Binary operators are left-associative; precedence
/// NOT > JOIN > {INTERSECT, MINUS} > UNION. Throws QuerySyntaxError.
ExprPtr parse_query(std::string_view text);

/// Canonical text with minimal parentheses; parse_query(format_query(e)) == e.
std::string format_query(const QueryExpr& e);

using Catalog = std::map<std::string, NeutrosophicRelation>;

/// Result scheme of the expression: UnknownRelation, SchemeMismatch,
/// ProjectionNotSubset, UnknownAttribute on ill-formed queries.
Scheme infer_scheme(const QueryExpr& e, const Catalog& catalog);

enum class EvalMode { raw, robust };

struct EvalOptions {
  EvalMode mode = EvalMode::robust;
  std::uint64_t materialize_cap = kDefaultMaterializeCap;
};

/// Bottom-up evaluation. Robust mode (the default) wraps every algebra node
/// as combine ∘ op ∘ split; raw mode applies the operators directly, so a
/// projection over a multi-pair operand raises NotFunctional. Explicit SPLIT
/// and COMBINE nodes are honored verbatim in both modes.
NeutrosophicRelation evaluate(const QueryExpr& e, const Catalog& catalog,
                              const EvalOptions& options = {});

}  // namespace neutro
