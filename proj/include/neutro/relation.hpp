#pragma once

#include <map>

#include "neutro/grade.hpp"
#include "neutro/scheme.hpp"

namespace neutro {

/// One ⟨belief, doubt⟩ pair. The components are independent grades: their sum
/// below 1 means incomplete information about the tuple, above 1 inconsistent
/// information.
struct ConfidencePair {
  Grade belief;
  Grade doubt;

  int sum_vs_one() const { return neutro::sum_vs_one(belief, doubt); }
  bool is_default() const { return belief.is_zero() && doubt.is_zero(); }

  friend auto operator<=>(const ConfidencePair&, const ConfidencePair&) = default;
};

/// Sorted, deduplicated, non-empty.
using PairSet = std::vector<ConfidencePair>;

PairSet normalize_pairs(PairSet pairs);

struct Classification {
  bool consistent = false;
  bool complete = false;
  bool total = false;
  bool pseudo_consistent = false;
  bool functional = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// A relation mapping tuples to non-empty sets of confidence pairs. Tuples
/// that are not stored implicitly carry the single pair ⟨0,0⟩ ("no
/// information"), and construction canonicalizes: pair sets are deduplicated
/// and a stored set equal to exactly {⟨0,0⟩} is elided. Canonical form makes
/// structural equality coincide with semantic equality. Immutable after
/// construction; a relation is "functional" when every stored tuple has
/// exactly one pair.
class NeutrosophicRelation {
 public:
  explicit NeutrosophicRelation(Scheme scheme);
  NeutrosophicRelation(Scheme scheme, std::map<Tuple, PairSet> rows);

  const Scheme& scheme() const { return scheme_; }
  const std::map<Tuple, PairSet>& rows() const { return rows_; }

  /// The stored pair set, or the default singleton {⟨0,0⟩} when unstored.
  /// SchemeMismatch when the tuple does not conform.
  const PairSet& pairs_at(const Tuple& t) const;
  bool stores(const Tuple& t) const { return rows_.count(t) != 0; }
  std::size_t stored_count() const { return rows_.size(); }
  bool is_functional() const;

  friend bool operator==(const NeutrosophicRelation&, const NeutrosophicRelation&);

 private:
  Scheme scheme_;
  std::map<Tuple, PairSet> rows_;
};

/// A relation mapping each tuple to a single membership grade; unstored
/// tuples have grade 0 and zero grades are never stored.
class FuzzyRelation {
 public:
  explicit FuzzyRelation(Scheme scheme);
  FuzzyRelation(Scheme scheme, std::map<Tuple, Grade> grades);

  const Scheme& scheme() const { return scheme_; }
  const std::map<Tuple, Grade>& grades() const { return grades_; }
  Grade grade_at(const Tuple& t) const;

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&);
  /// Ordering for use in sets; compares the grade maps of same-scheme
  /// relations.
  friend bool operator<(const FuzzyRelation& a, const FuzzyRelation& b);

 private:
  Scheme scheme_;
  std::map<Tuple, Grade> grades_;
};

Classification classify(const NeutrosophicRelation& r);

/// Rebuilds the relation through canonicalization. Construction already
/// canonicalizes, so this is the identity on any reachable value; it exists
/// as the explicit operation and for tests.
NeutrosophicRelation canonicalize(const NeutrosophicRelation& r);

/// Belief factors of a total relation as a fuzzy relation. NotTotal otherwise.
FuzzyRelation to_fuzzy(const NeutrosophicRelation& r);

/// Embeds a fuzzy relation as the total relation ⟨g, 1-g⟩ on every tuple of
/// the scheme's tuple space. MaterializationLimit when the space exceeds cap.
NeutrosophicRelation from_fuzzy(const FuzzyRelation& f, std::uint64_t cap = 1'000'000);

}  // namespace neutro
