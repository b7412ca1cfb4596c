#include "neutro/relation.hpp"

#include <algorithm>

#include "neutro/error.hpp"

namespace neutro {

namespace {
const PairSet& default_pair_set() {
  static const PairSet k_default = {ConfidencePair{}};
  return k_default;
}
}  // namespace

PairSet normalize_pairs(PairSet pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

NeutrosophicRelation::NeutrosophicRelation(Scheme scheme) : scheme_(std::move(scheme)) {}

NeutrosophicRelation::NeutrosophicRelation(Scheme scheme, std::map<Tuple, PairSet> rows)
    : scheme_(std::move(scheme)) {
  for (auto& [t, pairs] : rows) {
    scheme_.require_conforms(t);
    PairSet canon = normalize_pairs(std::move(pairs));
    if (canon.empty()) fail(ErrorKind::ParseError, "empty pair set for a stored tuple");
    if (canon.size() == 1 && canon.front().is_default()) continue;  // elide defaults
    rows_.emplace(t, std::move(canon));
  }
}

const PairSet& NeutrosophicRelation::pairs_at(const Tuple& t) const {
  scheme_.require_conforms(t);
  const auto it = rows_.find(t);
  return it == rows_.end() ? default_pair_set() : it->second;
}

bool NeutrosophicRelation::is_functional() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& row) { return row.second.size() == 1; });
}

bool operator==(const NeutrosophicRelation& a, const NeutrosophicRelation& b) {
  return a.scheme_ == b.scheme_ && a.rows_ == b.rows_;
}

FuzzyRelation::FuzzyRelation(Scheme scheme) : scheme_(std::move(scheme)) {}

FuzzyRelation::FuzzyRelation(Scheme scheme, std::map<Tuple, Grade> grades)
    : scheme_(std::move(scheme)) {
  for (auto& [t, g] : grades) {
    scheme_.require_conforms(t);
    if (!g.is_zero()) grades_.emplace(t, g);
  }
}

Grade FuzzyRelation::grade_at(const Tuple& t) const {
  scheme_.require_conforms(t);
  const auto it = grades_.find(t);
  return it == grades_.end() ? Grade::zero() : it->second;
}

bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
  return a.scheme_ == b.scheme_ && a.grades_ == b.grades_;
}

bool operator<(const FuzzyRelation& a, const FuzzyRelation& b) { return a.grades_ < b.grades_; }

Classification classify(const NeutrosophicRelation& r) {
  Classification c;
  c.functional = r.is_functional();
  c.consistent = true;
  bool stored_complete = true;  // every stored tuple has some pair with b+d >= 1
  bool all_sum_one = true;
  c.pseudo_consistent = false;
  for (const auto& [t, pairs] : r.rows()) {
    bool tuple_has_sum_ge_one = false;
    Grade max_belief = Grade::zero();
    Grade max_doubt = Grade::zero();
    for (const auto& p : pairs) {
      const int s = p.sum_vs_one();
      if (s > 0) c.consistent = false;
      if (s >= 0) tuple_has_sum_ge_one = true;
      if (s != 0) all_sum_one = false;
      max_belief = std::max(max_belief, p.belief);
      max_doubt = std::max(max_doubt, p.doubt);
    }
    if (!tuple_has_sum_ge_one) stored_complete = false;
    if (sum_vs_one(max_belief, max_doubt) > 0) {
      bool maximizers_sum_one = true;
      for (const auto& p : pairs) {
        if ((p.belief == max_belief || p.doubt == max_doubt) && p.sum_vs_one() != 0)
          maximizers_sum_one = false;
      }
      if (maximizers_sum_one) c.pseudo_consistent = true;
    }
  }
  const bool all_stored = r.stored_count() == r.scheme().tuple_space_size();
  c.complete = stored_complete && all_stored;
  c.total = c.functional && all_stored && all_sum_one;
  return c;
}

NeutrosophicRelation canonicalize(const NeutrosophicRelation& r) {
  return NeutrosophicRelation(r.scheme(), r.rows());
}

FuzzyRelation to_fuzzy(const NeutrosophicRelation& r) {
  if (!classify(r).total)
    fail(ErrorKind::NotTotal, "belief image is defined for total relations only");
  std::map<Tuple, Grade> grades;
  for (const auto& [t, pairs] : r.rows()) grades.emplace(t, pairs.front().belief);
  return FuzzyRelation(r.scheme(), std::move(grades));
}

NeutrosophicRelation from_fuzzy(const FuzzyRelation& f, std::uint64_t cap) {
  const Scheme& scheme = f.scheme();
  if (scheme.tuple_space_size() > cap)
    fail(ErrorKind::MaterializationLimit,
         "embedding a fuzzy relation stores every tuple of a space of size " +
             std::to_string(scheme.tuple_space_size()));
  std::map<Tuple, PairSet> rows;
  Tuple t = first_tuple(scheme);
  do {
    const Grade g = f.grade_at(t);
    rows.emplace(t, PairSet{ConfidencePair{g, g.complement()}});
  } while (next_tuple(scheme, t));
  return NeutrosophicRelation(scheme, std::move(rows));
}

}  // namespace neutro
