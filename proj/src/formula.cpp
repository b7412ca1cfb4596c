#include "neutro/formula.hpp"

#include <optional>

#include "neutro/error.hpp"

namespace neutro {

FormulaPtr make_eq_const(std::string attr, std::string literal) {
  return std::make_shared<SelectionFormula>(
      SelectionFormula{AttrEqConst{std::move(attr), std::move(literal)}});
}
FormulaPtr make_eq_attr(std::string left, std::string right) {
  return std::make_shared<SelectionFormula>(
      SelectionFormula{AttrEqAttr{std::move(left), std::move(right)}});
}
FormulaPtr make_not(FormulaPtr inner) {
  return std::make_shared<SelectionFormula>(SelectionFormula{FormulaNot{std::move(inner)}});
}
FormulaPtr make_and(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<SelectionFormula>(
      SelectionFormula{FormulaAnd{std::move(left), std::move(right)}});
}
FormulaPtr make_or(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<SelectionFormula>(
      SelectionFormula{FormulaOr{std::move(left), std::move(right)}});
}

bool formula_equal(const SelectionFormula& a, const SelectionFormula& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<AttrEqConst>(&a.node)) {
    const auto& y = std::get<AttrEqConst>(b.node);
    return x->attr == y.attr && x->literal == y.literal;
  }
  if (const auto* x = std::get_if<AttrEqAttr>(&a.node)) {
    const auto& y = std::get<AttrEqAttr>(b.node);
    return x->left == y.left && x->right == y.right;
  }
  if (const auto* x = std::get_if<FormulaNot>(&a.node)) {
    return formula_equal(*x->inner, *std::get<FormulaNot>(b.node).inner);
  }
  if (const auto* x = std::get_if<FormulaAnd>(&a.node)) {
    const auto& y = std::get<FormulaAnd>(b.node);
    return formula_equal(*x->left, *y.left) && formula_equal(*x->right, *y.right);
  }
  const auto& x = std::get<FormulaOr>(a.node);
  const auto& y = std::get<FormulaOr>(b.node);
  return formula_equal(*x.left, *y.left) && formula_equal(*x.right, *y.right);
}

namespace {

// Precedence: OR = 1, AND = 2, NOT/atom = 3. Left-associative connectives.
int formula_prec(const SelectionFormula& f) {
  if (std::holds_alternative<FormulaOr>(f.node)) return 1;
  if (std::holds_alternative<FormulaAnd>(f.node)) return 2;
  return 3;
}

void format_into(const SelectionFormula& f, std::string& out);

void format_child(const SelectionFormula& child, int parent_prec, bool is_right,
                  std::string& out) {
  const int prec = formula_prec(child);
  const bool parens = prec < parent_prec || (is_right && prec == parent_prec);
  if (parens) out.push_back('(');
  format_into(child, out);
  if (parens) out.push_back(')');
}

void format_into(const SelectionFormula& f, std::string& out) {
  if (const auto* a = std::get_if<AttrEqConst>(&f.node)) {
    out += a->attr;
    out += " = '";
    out += a->literal;
    out += "'";
  } else if (const auto* a = std::get_if<AttrEqAttr>(&f.node)) {
    out += a->left;
    out += " = ";
    out += a->right;
  } else if (const auto* n = std::get_if<FormulaNot>(&f.node)) {
    out += "NOT(";
    format_into(*n->inner, out);
    out.push_back(')');
  } else if (const auto* n = std::get_if<FormulaAnd>(&f.node)) {
    format_child(*n->left, 2, false, out);
    out += " AND ";
    format_child(*n->right, 2, true, out);
  } else {
    const auto& n = std::get<FormulaOr>(f.node);
    format_child(*n.left, 1, false, out);
    out += " OR ";
    format_child(*n.right, 1, true, out);
  }
}

}  // namespace

std::string format_formula(const SelectionFormula& f) {
  std::string out;
  format_into(f, out);
  return out;
}

struct CompiledFormula::Node {
  enum class Kind { EqConst, EqAttr, Not, And, Or } kind;
  std::size_t attr_pos = 0;
  std::optional<std::uint32_t> const_index;  // EqConst; nullopt never matches
  std::size_t other_pos = 0;                 // EqAttr compares value strings
  std::shared_ptr<const Node> left, right;
};

namespace {

std::size_t resolve_attr(const std::string& name, const Scheme& scheme) {
  const auto pos = scheme.position_of(name);
  if (!pos)
    fail(ErrorKind::UnknownAttribute,
         "'" + name + "' is not an attribute of scheme " + scheme.str());
  return *pos;
}

std::shared_ptr<const CompiledFormula::Node> compile(const SelectionFormula& f,
                                                     const Scheme& scheme) {
  using Node = CompiledFormula::Node;
  auto node = std::make_shared<Node>();
  if (const auto* a = std::get_if<AttrEqConst>(&f.node)) {
    node->kind = Node::Kind::EqConst;
    node->attr_pos = resolve_attr(a->attr, scheme);
    node->const_index = scheme.attribute(node->attr_pos).domain.index_of(a->literal);
  } else if (const auto* a = std::get_if<AttrEqAttr>(&f.node)) {
    node->kind = Node::Kind::EqAttr;
    node->attr_pos = resolve_attr(a->left, scheme);
    node->other_pos = resolve_attr(a->right, scheme);
  } else if (const auto* n = std::get_if<FormulaNot>(&f.node)) {
    node->kind = Node::Kind::Not;
    node->left = compile(*n->inner, scheme);
  } else if (const auto* n = std::get_if<FormulaAnd>(&f.node)) {
    node->kind = Node::Kind::And;
    node->left = compile(*n->left, scheme);
    node->right = compile(*n->right, scheme);
  } else {
    const auto& n = std::get<FormulaOr>(f.node);
    node->kind = Node::Kind::Or;
    node->left = compile(*n.left, scheme);
    node->right = compile(*n.right, scheme);
  }
  return node;
}

bool eval_node(const CompiledFormula::Node& node, const Scheme& scheme, const Tuple& t) {
  using Kind = CompiledFormula::Node::Kind;
  switch (node.kind) {
    case Kind::EqConst:
      return node.const_index && t[node.attr_pos] == *node.const_index;
    case Kind::EqAttr:
      return scheme.value_at(t, node.attr_pos) == scheme.value_at(t, node.other_pos);
    case Kind::Not:
      return !eval_node(*node.left, scheme, t);
    case Kind::And:
      return eval_node(*node.left, scheme, t) && eval_node(*node.right, scheme, t);
    case Kind::Or:
      return eval_node(*node.left, scheme, t) || eval_node(*node.right, scheme, t);
  }
  return false;
}

}  // namespace

CompiledFormula::CompiledFormula(const SelectionFormula& f, const Scheme& scheme)
    : root_(compile(f, scheme)), scheme_(scheme) {}

bool CompiledFormula::matches(const Tuple& t) const { return eval_node(*root_, scheme_, t); }

void validate_formula(const SelectionFormula& f, const Scheme& scheme) {
  CompiledFormula(f, scheme);
}

}  // namespace neutro
