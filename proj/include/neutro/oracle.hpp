#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "neutro/relation.hpp"

namespace neutro {

/// The finite grade grid {0, 1/k, ..., 1}: a desk-scale stand-in for the unit
/// interval. Every operator formula uses only min, max, and 1-x, so grid
/// points map to grid points and exhaustive checks stay on the grid.
struct GradeGrid {
  std::int64_t k = 2;

  std::vector<Grade> values() const;
  bool contains(const Grade& g) const { return g.on_grid(k); }
};

using FuzzyRelationSet = std::set<FuzzyRelation>;

using NeutroOp = std::function<NeutrosophicRelation(const std::vector<NeutrosophicRelation>&)>;
using FuzzyOp = std::function<FuzzyRelation(const std::vector<FuzzyRelation>&)>;

/// All fuzzy relations Q with belief(t) <= Q(t) <= 1 - doubt(t) on every tuple
/// of the scheme's tuple space, restricted to the grid (unstored tuples admit
/// the whole grid). Requires a consistent functional relation whose interval
/// endpoints lie on the grid: NotConsistent / NotFunctional / OffGrid.
FuzzyRelationSet completions(const NeutrosophicRelation& r, const GradeGrid& grid);

/// Product over tuples of the per-tuple interval point counts, without
/// enumerating. Same preconditions as completions.
std::uint64_t completion_count(const NeutrosophicRelation& r, const GradeGrid& grid);

/// { op(Q1,...,Qn) : Qi in sets[i] }, deduplicated.
FuzzyRelationSet lifted_image(const FuzzyOp& op, const std::vector<FuzzyRelationSet>& sets);

/// A neutrosophic operator paired with its fuzzy counterpart, closed over any
/// fixed parameters (projection list, selection formula) and over the operand
/// schemes the check enumerates.
struct OperatorPair {
  std::string name;
  std::vector<Scheme> operand_schemes;
  NeutroOp neutro;
  FuzzyOp fuzzy;
  /// Whether the set-equality (strong) check is expected to apply; entries
  /// with strong=false are weak-checked only in the bundled suite.
  bool strong = true;
};

struct CheckBudget {
  std::uint64_t max_tuple_space = 4;
  std::int64_t max_grid = 4;
};

struct CheckOutcome {
  bool holds = true;
  std::uint64_t instances = 0;
  /// Operand list of the first failing combination in enumeration order;
  /// empty when the check holds.
  std::vector<NeutrosophicRelation> counterexample;
  std::string detail;
};

/// Totality-classed relations on the grid: one pair ⟨g, 1-g⟩ per tuple, every
/// tuple stored; ascending enumeration order.
std::vector<NeutrosophicRelation> enumerate_total_relations(const Scheme& scheme,
                                                            const GradeGrid& grid);

/// All consistent functional relations on the grid: per tuple any pair with
/// b + d <= 1, in (belief, doubt)-ascending odometer order; the all-default
/// relation comes first.
std::vector<NeutrosophicRelation> enumerate_consistent_functional(const Scheme& scheme,
                                                                  const GradeGrid& grid);

/// Weak generalization: over every combination of total operands on the grid,
/// the neutrosophic result is total and its belief image equals the fuzzy
/// operator applied to the operands' belief images. Returns the first
/// counterexample in enumeration order. BudgetExceeded when an operand
/// tuple space or the grid exceeds the budget.
CheckOutcome check_weak(const OperatorPair& op, const GradeGrid& grid,
                        const CheckBudget& budget = {});

/// Strong generalization: over every combination of consistent functional
/// operands on the grid, completions(result) equals the lifted image of the
/// operands' completion sets.
CheckOutcome check_strong(const OperatorPair& op, const GradeGrid& grid,
                          const CheckBudget& budget = {});

/// The bundled operator/scheme instances used by `verify` and the acceptance
/// suite. With include_overlap_join, adds natural-join instances over
/// non-identical schemes, for which the set-equality check is known to report
/// a counterexample (the lifted image is a strict subset when both operands
/// keep attributes the other lacks); those entries carry strong=true and will
/// fail honestly.
std::vector<OperatorPair> standard_operator_suite(bool include_overlap_join = false);

}  // namespace neutro
