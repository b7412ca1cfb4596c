#include "neutro/algebra.hpp"

#include <algorithm>
#include <set>

#include "neutro/error.hpp"

namespace neutro {

namespace {

void require_same_scheme(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  if (!(r.scheme() == s.scheme()))
    fail(ErrorKind::SchemeMismatch,
         "operands have different schemes: " + r.scheme().str() + " vs " + s.scheme().str());
}

/// Pointwise binary operator lifted over pair sets: the result pair set at a
/// tuple is { f(p, q) : p, q } over the operands' pair sets there.
template <typename PairFn>
NeutrosophicRelation pointwise(const NeutrosophicRelation& r, const NeutrosophicRelation& s,
                               PairFn f) {
  require_same_scheme(r, s);
  std::set<Tuple> keys;
  for (const auto& [t, _] : r.rows()) keys.insert(t);
  for (const auto& [t, _] : s.rows()) keys.insert(t);
  std::map<Tuple, PairSet> rows;
  for (const Tuple& t : keys) {
    PairSet out;
    for (const ConfidencePair& p : r.pairs_at(t)) {
      for (const ConfidencePair& q : s.pairs_at(t)) out.push_back(f(p, q));
    }
    rows.emplace(t, std::move(out));
  }
  return NeutrosophicRelation(r.scheme(), std::move(rows));
}

void require_functional(const NeutrosophicRelation& r, const char* op) {
  if (!r.is_functional())
    fail(ErrorKind::NotFunctional, std::string(op) + " requires a functional relation");
}

/// Appends to `sink` every tuple of `full` whose `positions` components match
/// the stored tuple `t` (positions align with t's scheme order).
void collect_extensions(const Scheme& full, const std::vector<std::size_t>& positions,
                        const Tuple& t, std::set<Tuple>& sink) {
  std::vector<bool> is_fixed(full.size(), false);
  std::vector<std::uint32_t> idx(full.size(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    is_fixed[positions[i]] = true;
    idx[positions[i]] = t[i];
  }
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (!is_fixed[i]) free_pos.push_back(i);
  }
  for (;;) {
    sink.emplace(idx);
    bool advanced = false;
    for (std::size_t i = free_pos.size(); i-- > 0;) {
      const std::size_t p = free_pos[i];
      if (idx[p] + 1 < full.attribute(p).domain.size()) {
        ++idx[p];
        for (std::size_t j = i + 1; j < free_pos.size(); ++j) idx[free_pos[j]] = 0;
        advanced = true;
        break;
      }
      idx[p] = 0;
    }
    if (!advanced) return;
  }
}

struct ProjectionPlan {
  Scheme target;
  std::vector<std::size_t> positions;   // of `attrs` within the source scheme
  std::uint64_t dropped_space;          // |extensions| of each target tuple
};

ProjectionPlan plan_projection(const Scheme& source, const std::vector<std::string>& attrs) {
  if (attrs.empty()) fail(ErrorKind::SchemeMismatch, "projection list is empty");
  ProjectionPlan plan;
  std::set<std::string_view> seen;
  std::vector<Attribute> target_attrs;
  for (const auto& name : attrs) {
    if (!seen.insert(name).second)
      fail(ErrorKind::SchemeMismatch, "duplicate attribute '" + name + "' in projection");
    const auto pos = source.position_of(name);
    if (!pos)
      fail(ErrorKind::SchemeMismatch,
           "attribute '" + name + "' is not part of scheme " + source.str());
    plan.positions.push_back(*pos);
    target_attrs.push_back(source.attribute(*pos));
  }
  plan.target = Scheme(std::move(target_attrs));
  plan.dropped_space = 1;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (std::find(plan.positions.begin(), plan.positions.end(), i) == plan.positions.end()) {
      const std::uint64_t d = source.attribute(i).domain.size();
      plan.dropped_space =
          plan.dropped_space > UINT64_MAX / d ? UINT64_MAX : plan.dropped_space * d;
    }
  }
  return plan;
}

/// Shared body of plain and fused projection: `reduce` maps a stored pair set
/// to the single ⟨belief, doubt⟩ contribution of that extension.
template <typename Reduce>
NeutrosophicRelation project_impl(const NeutrosophicRelation& r,
                                  const std::vector<std::string>& attrs, Reduce reduce) {
  const ProjectionPlan plan = plan_projection(r.scheme(), attrs);
  struct Acc {
    Grade belief;   // max over extensions seen
    Grade doubt;    // min over extensions seen
    std::uint64_t stored = 0;
  };
  std::map<Tuple, Acc> groups;
  for (const auto& [u, pairs] : r.rows()) {
    const ConfidencePair c = reduce(pairs);
    auto [it, inserted] = groups.emplace(project_tuple(u, plan.positions), Acc{c.belief, c.doubt, 1});
    if (!inserted) {
      it->second.belief = std::max(it->second.belief, c.belief);
      it->second.doubt = std::min(it->second.doubt, c.doubt);
      ++it->second.stored;
    }
  }
  std::map<Tuple, PairSet> rows;
  for (auto& [t, acc] : groups) {
    // Unstored extensions carry ⟨0,0⟩: they never raise the belief maximum
    // but they pull the doubt minimum down to zero.
    const Grade doubt = acc.stored < plan.dropped_space ? Grade::zero() : acc.doubt;
    rows.emplace(t, PairSet{ConfidencePair{acc.belief, doubt}});
  }
  return NeutrosophicRelation(plan.target, std::move(rows));
}

ConfidencePair max_pair(const PairSet& pairs) {
  Grade b = Grade::zero();
  Grade d = Grade::zero();
  for (const auto& p : pairs) {
    b = std::max(b, p.belief);
    d = std::max(d, p.doubt);
  }
  return {b, d};
}

}  // namespace

NeutrosophicRelation union_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  return pointwise(r, s, [](const ConfidencePair& p, const ConfidencePair& q) {
    return ConfidencePair{std::max(p.belief, q.belief), std::min(p.doubt, q.doubt)};
  });
}

NeutrosophicRelation intersection_of(const NeutrosophicRelation& r,
                                     const NeutrosophicRelation& s) {
  return pointwise(r, s, [](const ConfidencePair& p, const ConfidencePair& q) {
    return ConfidencePair{std::min(p.belief, q.belief), std::max(p.doubt, q.doubt)};
  });
}

NeutrosophicRelation difference_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  return pointwise(r, s, [](const ConfidencePair& p, const ConfidencePair& q) {
    return ConfidencePair{std::min(p.belief, q.doubt), std::max(p.doubt, q.belief)};
  });
}

NeutrosophicRelation complement_of(const NeutrosophicRelation& r) {
  std::map<Tuple, PairSet> rows;
  for (const auto& [t, pairs] : r.rows()) {
    PairSet out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(ConfidencePair{p.doubt, p.belief});
    rows.emplace(t, std::move(out));
  }
  return NeutrosophicRelation(r.scheme(), std::move(rows));
}

NeutrosophicRelation join_of(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  const Scheme out = union_scheme(r.scheme(), s.scheme());
  const auto r_pos = positions_in(r.scheme(), out);
  const auto s_pos = positions_in(s.scheme(), out);
  // Any combined tuple whose projections are both unstored joins to ⟨0,0⟩, so
  // the candidates are the extensions of either operand's stored tuples.
  std::set<Tuple> candidates;
  for (const auto& [t, _] : r.rows()) collect_extensions(out, r_pos, t, candidates);
  for (const auto& [t, _] : s.rows()) collect_extensions(out, s_pos, t, candidates);
  std::map<Tuple, PairSet> rows;
  for (const Tuple& t : candidates) {
    const PairSet& rp = r.pairs_at(project_tuple(t, r_pos));
    const PairSet& sp = s.pairs_at(project_tuple(t, s_pos));
    PairSet pairs;
    for (const auto& p : rp) {
      for (const auto& q : sp) {
        pairs.push_back(
            ConfidencePair{std::min(p.belief, q.belief), std::max(p.doubt, q.doubt)});
      }
    }
    rows.emplace(t, std::move(pairs));
  }
  return NeutrosophicRelation(out, std::move(rows));
}

NeutrosophicRelation project_onto(const NeutrosophicRelation& r,
                                  const std::vector<std::string>& attrs) {
  require_functional(r, "projection");
  return project_impl(r, attrs, [](const PairSet& pairs) { return pairs.front(); });
}

NeutrosophicRelation select_where(const NeutrosophicRelation& r, const SelectionFormula& f,
                                  std::uint64_t cap) {
  const CompiledFormula compiled(f, r.scheme());
  const std::uint64_t space = r.scheme().tuple_space_size();
  if (space > cap)
    fail(ErrorKind::MaterializationLimit,
         "selection over a tuple space of size " + std::to_string(space) + " exceeds the cap of " +
             std::to_string(cap));
  std::map<Tuple, PairSet> rows;
  Tuple t = first_tuple(r.scheme());
  do {
    if (compiled.matches(t)) {
      if (r.stores(t)) rows.emplace(t, r.pairs_at(t));
    } else {
      rows.emplace(t, PairSet{ConfidencePair{Grade::zero(), Grade::one()}});
    }
  } while (next_tuple(r.scheme(), t));
  return NeutrosophicRelation(r.scheme(), std::move(rows));
}

NeutrosophicRelation split(const NeutrosophicRelation& r) {
  std::map<Tuple, PairSet> rows;
  for (const auto& [t, pairs] : r.rows()) {
    PairSet out;
    for (const auto& p : pairs) {
      if (p.sum_vs_one() <= 0) {
        out.push_back(p);
      } else {
        out.push_back(ConfidencePair{p.belief, p.belief.complement()});
        out.push_back(ConfidencePair{p.doubt.complement(), p.doubt});
      }
    }
    rows.emplace(t, std::move(out));
  }
  return NeutrosophicRelation(r.scheme(), std::move(rows));
}

NeutrosophicRelation combine(const NeutrosophicRelation& r) {
  std::map<Tuple, PairSet> rows;
  for (const auto& [t, pairs] : r.rows()) rows.emplace(t, PairSet{max_pair(pairs)});
  return NeutrosophicRelation(r.scheme(), std::move(rows));
}

NeutrosophicRelation robust_union(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  return combine(union_of(split(r), split(s)));
}

NeutrosophicRelation robust_intersection(const NeutrosophicRelation& r,
                                         const NeutrosophicRelation& s) {
  return combine(intersection_of(split(r), split(s)));
}

NeutrosophicRelation robust_difference(const NeutrosophicRelation& r,
                                       const NeutrosophicRelation& s) {
  return combine(difference_of(split(r), split(s)));
}

NeutrosophicRelation robust_complement(const NeutrosophicRelation& r) {
  return combine(complement_of(split(r)));
}

NeutrosophicRelation robust_join(const NeutrosophicRelation& r, const NeutrosophicRelation& s) {
  return combine(join_of(split(r), split(s)));
}

NeutrosophicRelation robust_project(const NeutrosophicRelation& r,
                                    const std::vector<std::string>& attrs) {
  // One pair may be chosen per extension; taking the per-extension maxima and
  // then the max-belief / min-doubt extrema over extensions collapses all
  // those choices exactly as a final combine would.
  return project_impl(split(r), attrs, max_pair);
}

NeutrosophicRelation robust_select(const NeutrosophicRelation& r, const SelectionFormula& f,
                                   std::uint64_t cap) {
  return combine(select_where(split(r), f, cap));
}

}  // namespace neutro
