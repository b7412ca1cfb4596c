#include "neutro/fuzzy.hpp"

#include <algorithm>
#include <set>

#include "neutro/error.hpp"

namespace neutro {

namespace {

void require_same_scheme(const FuzzyRelation& r, const FuzzyRelation& s) {
  if (!(r.scheme() == s.scheme()))
    fail(ErrorKind::SchemeMismatch,
         "operands have different schemes: " + r.scheme().str() + " vs " + s.scheme().str());
}

}  // namespace

FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r, s);
  std::map<Tuple, Grade> grades = r.grades();
  for (const auto& [t, g] : s.grades()) {
    auto [it, inserted] = grades.emplace(t, g);
    if (!inserted) it->second = std::max(it->second, g);
  }
  return FuzzyRelation(r.scheme(), std::move(grades));
}

FuzzyRelation fuzzy_intersection(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r, s);
  std::map<Tuple, Grade> grades;
  for (const auto& [t, g] : r.grades()) {
    const Grade h = s.grade_at(t);
    grades.emplace(t, std::min(g, h));
  }
  return FuzzyRelation(r.scheme(), std::move(grades));
}

FuzzyRelation fuzzy_difference(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r, s);
  std::map<Tuple, Grade> grades;
  for (const auto& [t, g] : r.grades()) grades.emplace(t, std::min(g, s.grade_at(t).complement()));
  return FuzzyRelation(r.scheme(), std::move(grades));
}

FuzzyRelation fuzzy_complement(const FuzzyRelation& r, std::uint64_t cap) {
  const Scheme& scheme = r.scheme();
  if (scheme.tuple_space_size() > cap)
    fail(ErrorKind::MaterializationLimit,
         "complement over a tuple space of size " + std::to_string(scheme.tuple_space_size()));
  std::map<Tuple, Grade> grades;
  Tuple t = first_tuple(scheme);
  do {
    grades.emplace(t, r.grade_at(t).complement());
  } while (next_tuple(scheme, t));
  return FuzzyRelation(scheme, std::move(grades));
}

FuzzyRelation fuzzy_join(const FuzzyRelation& r, const FuzzyRelation& s) {
  const Scheme out = union_scheme(r.scheme(), s.scheme());
  const auto r_pos = positions_in(r.scheme(), out);
  const auto s_pos = positions_in(s.scheme(), out);
  // min(r, s) is nonzero only when both projections carry nonzero grades, so
  // pair up stored tuples agreeing on the shared attributes.
  std::map<Tuple, Grade> grades;
  std::vector<std::size_t> shared_r;  // positions in r of attributes shared with s
  std::vector<std::size_t> shared_s;
  for (std::size_t i = 0; i < r.scheme().size(); ++i) {
    if (const auto p = s.scheme().position_of(r.scheme().attribute(i).name)) {
      shared_r.push_back(i);
      shared_s.push_back(*p);
    }
  }
  for (const auto& [tr, gr] : r.grades()) {
    for (const auto& [ts, gs] : s.grades()) {
      bool agree = true;
      for (std::size_t i = 0; i < shared_r.size(); ++i) {
        if (tr[shared_r[i]] != ts[shared_s[i]]) {
          agree = false;
          break;
        }
      }
      if (!agree) continue;
      std::vector<std::uint32_t> idx(out.size(), 0);
      for (std::size_t i = 0; i < r_pos.size(); ++i) idx[r_pos[i]] = tr[i];
      for (std::size_t i = 0; i < s_pos.size(); ++i) idx[s_pos[i]] = ts[i];
      // A combined tuple determines both projections, so each one is built
      // exactly once.
      grades.emplace(Tuple(std::move(idx)), std::min(gr, gs));
    }
  }
  return FuzzyRelation(out, std::move(grades));
}

FuzzyRelation fuzzy_project(const FuzzyRelation& r, const std::vector<std::string>& attrs) {
  if (attrs.empty()) fail(ErrorKind::SchemeMismatch, "projection list is empty");
  std::vector<Attribute> target_attrs;
  std::vector<std::size_t> positions;
  std::set<std::string_view> seen;
  for (const auto& name : attrs) {
    if (!seen.insert(name).second)
      fail(ErrorKind::SchemeMismatch, "duplicate attribute '" + name + "' in projection");
    const auto pos = r.scheme().position_of(name);
    if (!pos)
      fail(ErrorKind::SchemeMismatch,
           "attribute '" + name + "' is not part of scheme " + r.scheme().str());
    positions.push_back(*pos);
    target_attrs.push_back(r.scheme().attribute(*pos));
  }
  Scheme target(std::move(target_attrs));
  std::map<Tuple, Grade> grades;
  for (const auto& [u, g] : r.grades()) {
    Tuple t = project_tuple(u, positions);
    auto [it, inserted] = grades.emplace(std::move(t), g);
    if (!inserted) it->second = std::max(it->second, g);
  }
  return FuzzyRelation(std::move(target), std::move(grades));
}

FuzzyRelation fuzzy_select(const FuzzyRelation& r, const SelectionFormula& f) {
  const CompiledFormula compiled(f, r.scheme());
  std::map<Tuple, Grade> grades;
  for (const auto& [t, g] : r.grades()) {
    if (compiled.matches(t)) grades.emplace(t, g);
  }
  return FuzzyRelation(r.scheme(), std::move(grades));
}

}  // namespace neutro
