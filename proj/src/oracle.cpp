#include "neutro/oracle.hpp"

#include <algorithm>

#include "neutro/algebra.hpp"
#include "neutro/error.hpp"
#include "neutro/fuzzy.hpp"

namespace neutro {

namespace {

using i128 = __int128;

/// k * g as an integer; the caller has verified g lies on the grid.
std::int64_t grid_index(const Grade& g, std::int64_t k) {
  return g.numerator() * (k / g.denominator());
}

/// Inclusive per-tuple completion range [belief, 1 - doubt] as grid indices.
/// Enforces the completions preconditions.
struct TupleRange {
  std::int64_t lo;
  std::int64_t hi;
};

std::vector<TupleRange> completion_ranges(const NeutrosophicRelation& r, const GradeGrid& grid) {
  if (!r.is_functional())
    fail(ErrorKind::NotFunctional, "completions are defined for functional relations");
  std::vector<TupleRange> ranges;
  Tuple t = first_tuple(r.scheme());
  do {
    const ConfidencePair p = r.pairs_at(t).front();
    if (p.sum_vs_one() > 0)
      fail(ErrorKind::NotConsistent,
           "completions are defined for consistent relations; tuple " + r.scheme().tuple_text(t) +
               " has belief + doubt > 1");
    if (!grid.contains(p.belief) || !grid.contains(p.doubt))
      fail(ErrorKind::OffGrid, "pair at tuple " + r.scheme().tuple_text(t) +
                                   " is not on the 1/" + std::to_string(grid.k) + " grid");
    ranges.push_back({grid_index(p.belief, grid.k), grid_index(p.doubt.complement(), grid.k)});
  } while (next_tuple(r.scheme(), t));
  return ranges;
}

}  // namespace

std::vector<Grade> GradeGrid::values() const {
  std::vector<Grade> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (std::int64_t i = 0; i <= k; ++i) out.emplace_back(i, k);
  return out;
}

FuzzyRelationSet completions(const NeutrosophicRelation& r, const GradeGrid& grid) {
  const auto ranges = completion_ranges(r, grid);
  const auto tuples = tuple_space(r.scheme());
  FuzzyRelationSet out;
  std::vector<std::int64_t> pick(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) pick[i] = ranges[i].lo;
  for (;;) {
    std::map<Tuple, Grade> grades;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (pick[i] != 0) grades.emplace(tuples[i], Grade(pick[i], grid.k));
    }
    out.emplace(r.scheme(), std::move(grades));
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (pick[i] < ranges[i].hi) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = ranges[j].lo;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

std::uint64_t completion_count(const NeutrosophicRelation& r, const GradeGrid& grid) {
  std::uint64_t n = 1;
  for (const TupleRange& range : completion_ranges(r, grid)) {
    const std::uint64_t points = static_cast<std::uint64_t>(range.hi - range.lo + 1);
    if (n > UINT64_MAX / points) return UINT64_MAX;
    n *= points;
  }
  return n;
}

FuzzyRelationSet lifted_image(const FuzzyOp& op, const std::vector<FuzzyRelationSet>& sets) {
  FuzzyRelationSet out;
  std::vector<FuzzyRelationSet::const_iterator> pick;
  pick.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.empty()) return out;
    pick.push_back(s.begin());
  }
  for (;;) {
    std::vector<FuzzyRelation> args;
    args.reserve(pick.size());
    for (const auto& it : pick) args.push_back(*it);
    out.insert(op(args));
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] != sets[i].end()) {
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = sets[j].begin();
        advanced = true;
        break;
      }
      pick[i] = sets[i].begin();
    }
    if (!advanced) return out;
  }
}

std::vector<NeutrosophicRelation> enumerate_total_relations(const Scheme& scheme,
                                                            const GradeGrid& grid) {
  const auto tuples = tuple_space(scheme);
  std::vector<NeutrosophicRelation> out;
  std::vector<std::int64_t> pick(tuples.size(), 0);
  for (;;) {
    std::map<Tuple, PairSet> rows;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const Grade g(pick[i], grid.k);
      rows.emplace(tuples[i], PairSet{ConfidencePair{g, g.complement()}});
    }
    out.emplace_back(scheme, std::move(rows));
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (pick[i] < grid.k) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

std::vector<NeutrosophicRelation> enumerate_consistent_functional(const Scheme& scheme,
                                                                  const GradeGrid& grid) {
  // Per-tuple consistent pairs in (belief, doubt)-ascending order; ⟨0,0⟩ first.
  std::vector<ConfidencePair> pairs;
  for (std::int64_t b = 0; b <= grid.k; ++b) {
    for (std::int64_t d = 0; d + b <= grid.k; ++d)
      pairs.push_back(ConfidencePair{Grade(b, grid.k), Grade(d, grid.k)});
  }
  const auto tuples = tuple_space(scheme);
  std::vector<NeutrosophicRelation> out;
  std::vector<std::size_t> pick(tuples.size(), 0);
  for (;;) {
    std::map<Tuple, PairSet> rows;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (!pairs[pick[i]].is_default()) rows.emplace(tuples[i], PairSet{pairs[pick[i]]});
    }
    out.emplace_back(scheme, std::move(rows));
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (pick[i] + 1 < pairs.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

namespace {

void require_budget(const OperatorPair& op, const GradeGrid& grid, const CheckBudget& budget) {
  if (grid.k < 1) fail(ErrorKind::BudgetExceeded, "grid denominator must be at least 1");
  if (grid.k > budget.max_grid)
    fail(ErrorKind::BudgetExceeded, "grid 1/" + std::to_string(grid.k) +
                                        " exceeds the budgeted 1/" +
                                        std::to_string(budget.max_grid));
  for (const Scheme& s : op.operand_schemes) {
    if (s.tuple_space_size() > budget.max_tuple_space)
      fail(ErrorKind::BudgetExceeded,
           "tuple space of " + s.str() + " exceeds the budget of " +
               std::to_string(budget.max_tuple_space));
  }
}

/// Walks every combination of per-operand relations in enumeration order and
/// applies `body` until it reports failure.
template <typename Body>
CheckOutcome run_combinations(const std::vector<std::vector<NeutrosophicRelation>>& operands,
                              Body body) {
  CheckOutcome outcome;
  std::vector<std::size_t> pick(operands.size(), 0);
  for (;;) {
    std::vector<NeutrosophicRelation> args;
    args.reserve(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) args.push_back(operands[i][pick[i]]);
    ++outcome.instances;
    std::string detail;
    if (!body(args, detail)) {
      outcome.holds = false;
      outcome.counterexample = std::move(args);
      outcome.detail = std::move(detail);
      return outcome;
    }
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (pick[i] + 1 < operands[i].size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return outcome;
  }
}

}  // namespace

CheckOutcome check_weak(const OperatorPair& op, const GradeGrid& grid, const CheckBudget& budget) {
  require_budget(op, grid, budget);
  std::vector<std::vector<NeutrosophicRelation>> operands;
  for (const Scheme& s : op.operand_schemes)
    operands.push_back(enumerate_total_relations(s, grid));
  return run_combinations(operands, [&](const std::vector<NeutrosophicRelation>& args,
                                        std::string& detail) {
    const NeutrosophicRelation result = op.neutro(args);
    if (!classify(result).total) {
      detail = "result is not total";
      return false;
    }
    std::vector<FuzzyRelation> images;
    images.reserve(args.size());
    for (const auto& a : args) images.push_back(to_fuzzy(a));
    if (!(to_fuzzy(result) == op.fuzzy(images))) {
      detail = "belief image disagrees with the fuzzy operator";
      return false;
    }
    return true;
  });
}

CheckOutcome check_strong(const OperatorPair& op, const GradeGrid& grid,
                          const CheckBudget& budget) {
  require_budget(op, grid, budget);
  std::vector<std::vector<NeutrosophicRelation>> operands;
  std::vector<std::vector<FuzzyRelationSet>> operand_completions;
  for (const Scheme& s : op.operand_schemes) {
    operands.push_back(enumerate_consistent_functional(s, grid));
    std::vector<FuzzyRelationSet> sets;
    sets.reserve(operands.back().size());
    for (const auto& r : operands.back()) sets.push_back(completions(r, grid));
    operand_completions.push_back(std::move(sets));
  }
  std::vector<std::size_t> pick(operands.size(), 0);
  CheckOutcome outcome;
  for (;;) {
    std::vector<NeutrosophicRelation> args;
    std::vector<FuzzyRelationSet> sets;
    args.reserve(pick.size());
    sets.reserve(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i) {
      args.push_back(operands[i][pick[i]]);
      sets.push_back(operand_completions[i][pick[i]]);
    }
    ++outcome.instances;
    const NeutrosophicRelation result = op.neutro(args);
    std::string detail;
    bool ok = true;
    if (!classify(result).consistent) {
      detail = "result is not consistent";
      ok = false;
    } else if (!(completions(result, grid) == lifted_image(op.fuzzy, sets))) {
      detail = "completion set differs from the lifted fuzzy image";
      ok = false;
    }
    if (!ok) {
      outcome.holds = false;
      outcome.counterexample = std::move(args);
      outcome.detail = std::move(detail);
      return outcome;
    }
    bool advanced = false;
    for (std::size_t i = pick.size(); i-- > 0;) {
      if (pick[i] + 1 < operands[i].size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return outcome;
  }
}

namespace {

Scheme one_attr(const std::string& name, std::vector<std::string> values) {
  return Scheme({Attribute{name, AttributeDomain(std::move(values))}});
}

OperatorPair binary_same_scheme(std::string name, const Scheme& scheme,
                                NeutrosophicRelation (*neutro)(const NeutrosophicRelation&,
                                                               const NeutrosophicRelation&),
                                FuzzyRelation (*fuzzy)(const FuzzyRelation&,
                                                       const FuzzyRelation&)) {
  OperatorPair op;
  op.name = std::move(name);
  op.operand_schemes = {scheme, scheme};
  op.neutro = [neutro](const std::vector<NeutrosophicRelation>& args) {
    return neutro(args[0], args[1]);
  };
  op.fuzzy = [fuzzy](const std::vector<FuzzyRelation>& args) { return fuzzy(args[0], args[1]); };
  return op;
}

OperatorPair join_pair(std::string name, Scheme left, Scheme right) {
  OperatorPair op;
  op.name = std::move(name);
  op.operand_schemes = {std::move(left), std::move(right)};
  op.neutro = [](const std::vector<NeutrosophicRelation>& args) {
    return join_of(args[0], args[1]);
  };
  op.fuzzy = [](const std::vector<FuzzyRelation>& args) { return fuzzy_join(args[0], args[1]); };
  return op;
}

OperatorPair select_pair(std::string name, Scheme scheme, FormulaPtr formula) {
  OperatorPair op;
  op.name = std::move(name);
  op.operand_schemes = {std::move(scheme)};
  op.neutro = [formula](const std::vector<NeutrosophicRelation>& args) {
    return select_where(args[0], *formula);
  };
  op.fuzzy = [formula](const std::vector<FuzzyRelation>& args) {
    return fuzzy_select(args[0], *formula);
  };
  return op;
}

}  // namespace

std::vector<OperatorPair> standard_operator_suite(bool include_overlap_join) {
  const Scheme abc = one_attr("A", {"a", "b", "c"});
  const Scheme ab = one_attr("A", {"a", "b"});
  const Scheme ab4 = one_attr("A", {"a", "b", "c", "d"});
  const Scheme b_of_ab = one_attr("B", {"a", "b"});
  const Scheme wide({Attribute{"A", AttributeDomain({"u"})},
                     Attribute{"B", AttributeDomain({"a", "b", "c"})}});
  const Scheme vw({Attribute{"V", AttributeDomain({"a", "b"})},
                   Attribute{"W", AttributeDomain({"a"})}});

  std::vector<OperatorPair> suite;
  suite.push_back(binary_same_scheme("union", abc, union_of, fuzzy_union));
  {
    OperatorPair op;
    op.name = "complement";
    op.operand_schemes = {abc};
    op.neutro = [](const std::vector<NeutrosophicRelation>& args) {
      return complement_of(args[0]);
    };
    op.fuzzy = [](const std::vector<FuzzyRelation>& args) { return fuzzy_complement(args[0]); };
    suite.push_back(std::move(op));
  }
  suite.push_back(binary_same_scheme("intersection", abc, intersection_of, fuzzy_intersection));
  suite.push_back(binary_same_scheme("difference", abc, difference_of, fuzzy_difference));
  suite.push_back(join_pair("join (shared scheme)", ab, ab));
  suite.push_back(join_pair("join (shared scheme, 4 values)", ab4, ab4));
  {
    // Free attributes on either side make the strong set-equality fail (the
    // lifted image couples tuples through the shared operand values), so the
    // disjoint instance is weak-checked unless explicitly requested.
    OperatorPair op = join_pair("join (disjoint schemes)", ab, b_of_ab);
    op.strong = false;
    suite.push_back(std::move(op));
  }
  {
    OperatorPair op;
    op.name = "projection";
    op.operand_schemes = {wide};
    op.neutro = [](const std::vector<NeutrosophicRelation>& args) {
      return project_onto(args[0], {"A"});
    };
    op.fuzzy = [](const std::vector<FuzzyRelation>& args) {
      return fuzzy_project(args[0], {"A"});
    };
    suite.push_back(std::move(op));
  }
  suite.push_back(select_pair("selection (A = 'a')", abc, make_eq_const("A", "a")));
  suite.push_back(
      select_pair("selection (NOT A = 'a')", abc, make_not(make_eq_const("A", "a"))));
  suite.push_back(select_pair("selection (A = 'a' OR A = 'b')", abc,
                              make_or(make_eq_const("A", "a"), make_eq_const("A", "b"))));
  suite.push_back(select_pair("selection (V = W AND NOT V = 'b')", vw,
                              make_and(make_eq_attr("V", "W"),
                                       make_not(make_eq_const("V", "b")))));
  if (include_overlap_join) {
    suite.push_back(join_pair("join (disjoint schemes, strong)", ab, b_of_ab));
    const Scheme xy({Attribute{"A", AttributeDomain({"a", "b"})},
                     Attribute{"B", AttributeDomain({"a", "b"})}});
    suite.push_back(join_pair("join (contained scheme, strong)", xy, b_of_ab));
  }
  return suite;
}

}  // namespace neutro
