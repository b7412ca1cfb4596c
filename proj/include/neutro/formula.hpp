#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "neutro/scheme.hpp"

namespace neutro {

struct SelectionFormula;
using FormulaPtr = std::shared_ptr<const SelectionFormula>;

struct AttrEqConst {
  std::string attr;
  std::string literal;
};

struct AttrEqAttr {
  std::string left;
  std::string right;
};

struct FormulaNot {
  FormulaPtr inner;
};

struct FormulaAnd {
  FormulaPtr left;
  FormulaPtr right;
};

struct FormulaOr {
  FormulaPtr left;
  FormulaPtr right;
};

/// Selection predicate over one scheme: equality atoms, negation, and the two
/// connectives. Bare identifiers in atoms are always attribute names; an
/// identifier that is not in the scheme is an error, never a constant.
struct SelectionFormula {
  std::variant<AttrEqConst, AttrEqAttr, FormulaNot, FormulaAnd, FormulaOr> node;
};

FormulaPtr make_eq_const(std::string attr, std::string literal);
FormulaPtr make_eq_attr(std::string left, std::string right);
FormulaPtr make_not(FormulaPtr inner);
FormulaPtr make_and(FormulaPtr left, FormulaPtr right);
FormulaPtr make_or(FormulaPtr left, FormulaPtr right);

bool formula_equal(const SelectionFormula& a, const SelectionFormula& b);

/// Canonical text: atoms as `X = Z` / `X = 'lit'`, NOT always parenthesizing
/// its operand, AND/OR left-associative with minimal parentheses.
std::string format_formula(const SelectionFormula& f);

/// UnknownAttribute when an atom names an attribute outside the scheme.
void validate_formula(const SelectionFormula& f, const Scheme& scheme);

/// A formula resolved against one scheme for repeated evaluation. A constant
/// outside its attribute's declared domain is simply never equal to anything.
class CompiledFormula {
 public:
  CompiledFormula(const SelectionFormula& f, const Scheme& scheme);
  bool matches(const Tuple& t) const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  Scheme scheme_;
};

}  // namespace neutro
