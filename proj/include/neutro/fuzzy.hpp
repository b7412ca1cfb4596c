#pragma once

#include <vector>

#include "neutro/formula.hpp"
#include "neutro/relation.hpp"

namespace neutro {

// Reference algebra on fuzzy relations, used as the oracle side of the
// generalization checks. Pointwise formulas: union max, intersection min,
// complement 1-g, difference min(g, 1-h); join min over projected sub-tuples,
// projection max over extensions, selection keeps or zeroes the grade.

FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_intersection(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_difference(const FuzzyRelation& r, const FuzzyRelation& s);

/// Complement stores a grade for every tuple the input left at zero, so it
/// materializes the tuple space. MaterializationLimit above `cap`.
FuzzyRelation fuzzy_complement(const FuzzyRelation& r, std::uint64_t cap = 1'000'000);

FuzzyRelation fuzzy_join(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_project(const FuzzyRelation& r, const std::vector<std::string>& attrs);
FuzzyRelation fuzzy_select(const FuzzyRelation& r, const SelectionFormula& f);

}  // namespace neutro
