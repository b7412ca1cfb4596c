#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neutro/formula.hpp"
#include "neutro/relation.hpp"

namespace neutro {

/// Upper bound on |tuple space| for operators that must store rows for
/// non-matching tuples (selection). Overridable per call; the CLI honors
/// NEUTRO_MATERIALIZE_CAP.
inline constexpr std::uint64_t kDefaultMaterializeCap = 1'000'000;

// Pointwise operators over identical schemes. Multi-pair rows combine by the
// Cartesian product of the operands' pair sets at each tuple; unstored tuples
// contribute the default pair ⟨0,0⟩.
NeutrosophicRelation union_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s);
NeutrosophicRelation intersection_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s);
NeutrosophicRelation difference_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s);
NeutrosophicRelation complement_of(const NeutrosophicRelation& r);

/// Natural join onto the attribute-union scheme: pairwise ⟨min belief,
/// max doubt⟩ of the operands' values at the projected sub-tuples.
NeutrosophicRelation join_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s);

/// Projection onto `attrs` (in list order): belief is the max, doubt the min,
/// over all extensions of the target tuple, defaults included. Defined for
/// functional relations only (NotFunctional otherwise); multi-pair operands
/// are projected only through robust_project.
NeutrosophicRelation project_onto(const NeutrosophicRelation& r,
                                  const std::vector<std::string>& attrs);

/// Tuples satisfying the formula keep their pair set; every failing tuple of
/// the whole tuple space, stored or not, becomes ⟨0,1⟩ and is stored.
/// MaterializationLimit when the tuple space exceeds `cap`.
NeutrosophicRelation select_where(const NeutrosophicRelation& r, const SelectionFormula& f,
                                  std::uint64_t cap = kDefaultMaterializeCap);

/// Replaces every pair with belief + doubt > 1 by the two boundary pairs
/// ⟨b, 1-b⟩ and ⟨1-d, d⟩; output never contains a pair summing above 1.
NeutrosophicRelation split(const NeutrosophicRelation& r);

/// Collapses each tuple's pair set to the single pair ⟨max belief, max doubt⟩;
/// output is always functional.
NeutrosophicRelation combine(const NeutrosophicRelation& r);

// combine ∘ operator ∘ split: the evaluation recipe for operands that may be
// inconsistent. Identical to the plain operator on consistent functional
// operands.
NeutrosophicRelation robust_union(const NeutrosophicRelation& r, const NeutrosophicRelation& s);
NeutrosophicRelation robust_intersection(const NeutrosophicRelation& r,
                                         const NeutrosophicRelation& s);
NeutrosophicRelation robust_difference(const NeutrosophicRelation& r,
                                       const NeutrosophicRelation& s);
NeutrosophicRelation robust_complement(const NeutrosophicRelation& r);
NeutrosophicRelation robust_join(const NeutrosophicRelation& r, const NeutrosophicRelation& s);

/// Projection fused over the split operand's pair sets: per target tuple,
/// belief = max over extensions of the per-extension max belief, doubt = min
/// over extensions of the per-extension max doubt (one pair chosen per
/// extension, collapsed). Result is functional by construction.
NeutrosophicRelation robust_project(const NeutrosophicRelation& r,
                                    const std::vector<std::string>& attrs);
NeutrosophicRelation robust_select(const NeutrosophicRelation& r, const SelectionFormula& f,
                                   std::uint64_t cap = kDefaultMaterializeCap);

}  // namespace neutro
