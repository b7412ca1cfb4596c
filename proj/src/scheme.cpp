#include "neutro/scheme.hpp"

#include <algorithm>
#include <set>

#include "neutro/error.hpp"

namespace neutro {

AttributeDomain::AttributeDomain(std::vector<std::string> values) {
  if (values.empty()) fail(ErrorKind::ParseError, "attribute domain must be non-empty");
  std::set<std::string_view> seen;
  for (const auto& v : values) {
    if (v.empty()) fail(ErrorKind::ParseError, "empty domain value");
    if (!seen.insert(v).second)
      fail(ErrorKind::ParseError, "duplicate domain value '" + v + "'");
  }
  values_ = std::make_shared<const std::vector<std::string>>(std::move(values));
}

const std::string& AttributeDomain::value(std::uint32_t index) const {
  return (*values_)[index];
}

std::optional<std::uint32_t> AttributeDomain::index_of(std::string_view value) const {
  for (std::uint32_t i = 0; i < values_->size(); ++i) {
    if ((*values_)[i] == value) return i;
  }
  return std::nullopt;
}

namespace {
const std::shared_ptr<const std::vector<Attribute>>& empty_attrs() {
  static const auto attrs = std::make_shared<const std::vector<Attribute>>();
  return attrs;
}
}  // namespace

Scheme::Scheme() : attrs_(empty_attrs()) {}

Scheme::Scheme(std::vector<Attribute> attributes) {
  std::set<std::string_view> seen;
  for (const auto& a : attributes) {
    if (a.name.empty()) fail(ErrorKind::ParseError, "empty attribute name");
    if (!seen.insert(a.name).second)
      fail(ErrorKind::ParseError, "duplicate attribute name '" + a.name + "'");
  }
  attrs_ = std::make_shared<const std::vector<Attribute>>(std::move(attributes));
}

std::optional<std::size_t> Scheme::position_of(std::string_view name) const {
  for (std::size_t i = 0; i < attrs_->size(); ++i) {
    if ((*attrs_)[i].name == name) return i;
  }
  return std::nullopt;
}

bool Scheme::conforms(const Tuple& t) const {
  if (t.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (t[i] >= attribute(i).domain.size()) return false;
  }
  return true;
}

void Scheme::require_conforms(const Tuple& t) const {
  if (!conforms(t))
    fail(ErrorKind::SchemeMismatch, "tuple does not conform to scheme " + str());
}

std::uint64_t Scheme::tuple_space_size() const {
  std::uint64_t n = 1;
  for (const auto& a : *attrs_) {
    const std::uint64_t d = a.domain.size();
    if (n > UINT64_MAX / d) return UINT64_MAX;
    n *= d;
  }
  return n;
}

const std::string& Scheme::value_at(const Tuple& t, std::size_t position) const {
  return attribute(position).domain.value(t[position]);
}

std::string Scheme::tuple_text(const Tuple& t) const {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out.push_back(',');
    out += value_at(t, i);
  }
  return out;
}

Tuple Scheme::tuple_of(const std::vector<std::string>& values) const {
  if (values.size() != size())
    fail(ErrorKind::SchemeMismatch, "expected " + std::to_string(size()) + " values, got " +
                                        std::to_string(values.size()));
  std::vector<std::uint32_t> idx(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto pos = attribute(i).domain.index_of(values[i]);
    if (!pos)
      fail(ErrorKind::DomainViolation, "value '" + values[i] + "' not in the domain of " +
                                           attribute(i).name);
    idx[i] = *pos;
  }
  return Tuple(std::move(idx));
}

std::string Scheme::str() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back(' ');
    out += attribute(i).name;
    out.push_back('{');
    const auto& vals = attribute(i).domain.values();
    for (std::size_t j = 0; j < vals.size(); ++j) {
      if (j) out.push_back(',');
      out += vals[j];
    }
    out.push_back('}');
  }
  return out;
}

Tuple first_tuple(const Scheme& scheme) {
  return Tuple(std::vector<std::uint32_t>(scheme.size(), 0));
}

bool next_tuple(const Scheme& scheme, Tuple& t) {
  std::vector<std::uint32_t> idx = t.indices();
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (idx[i] + 1 < scheme.attribute(i).domain.size()) {
      ++idx[i];
      std::fill(idx.begin() + static_cast<std::ptrdiff_t>(i) + 1, idx.end(), 0);
      t = Tuple(std::move(idx));
      return true;
    }
  }
  return false;
}

std::vector<Tuple> tuple_space(const Scheme& scheme) {
  std::vector<Tuple> out;
  Tuple t = first_tuple(scheme);
  do {
    out.push_back(t);
  } while (next_tuple(scheme, t));
  return out;
}

std::vector<std::size_t> positions_in(const Scheme& sub, const Scheme& full) {
  std::vector<std::size_t> out;
  out.reserve(sub.size());
  for (const auto& a : sub.attributes()) {
    const auto pos = full.position_of(a.name);
    if (!pos)
      fail(ErrorKind::SchemeMismatch, "attribute " + a.name + " missing from scheme " + full.str());
    if (!(full.attribute(*pos).domain == a.domain))
      fail(ErrorKind::SchemeMismatch, "attribute " + a.name + " bound to different domains");
    out.push_back(*pos);
  }
  return out;
}

Tuple project_tuple(const Tuple& t, const std::vector<std::size_t>& positions) {
  std::vector<std::uint32_t> idx;
  idx.reserve(positions.size());
  for (std::size_t p : positions) idx.push_back(t[p]);
  return Tuple(std::move(idx));
}

Scheme union_scheme(const Scheme& a, const Scheme& b) {
  std::vector<Attribute> attrs = a.attributes();
  for (const auto& attr : b.attributes()) {
    if (const auto pos = a.position_of(attr.name)) {
      if (!(a.attribute(*pos).domain == attr.domain))
        fail(ErrorKind::SchemeMismatch,
             "attribute " + attr.name + " bound to different domains in join");
    } else {
      attrs.push_back(attr);
    }
  }
  return Scheme(std::move(attrs));
}

std::vector<Tuple> extensions(const Scheme& sub, const Tuple& t, const Scheme& full) {
  sub.require_conforms(t);
  const auto fixed = positions_in(sub, full);
  std::vector<bool> is_fixed(full.size(), false);
  std::vector<std::uint32_t> base(full.size(), 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    is_fixed[fixed[i]] = true;
    base[fixed[i]] = t[i];
  }
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (!is_fixed[i]) free_pos.push_back(i);
  }
  std::vector<Tuple> out;
  std::vector<std::uint32_t> idx = base;
  for (;;) {
    out.emplace_back(idx);
    std::size_t i = free_pos.size();
    for (; i-- > 0;) {
      const std::size_t p = free_pos[i];
      if (idx[p] + 1 < full.attribute(p).domain.size()) {
        ++idx[p];
        for (std::size_t j = i + 1; j < free_pos.size(); ++j) idx[free_pos[j]] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (free_pos.empty()) return out;
  }
}

}  // namespace neutro
