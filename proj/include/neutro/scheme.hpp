#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace neutro {

/// Finite ordered list of distinct symbolic values for one attribute. The
/// declaration order is fixed and drives every deterministic output order.
class AttributeDomain {
 public:
  explicit AttributeDomain(std::vector<std::string> values);

  const std::vector<std::string>& values() const { return *values_; }
  std::size_t size() const { return values_->size(); }
  const std::string& value(std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(std::string_view value) const;

  friend bool operator==(const AttributeDomain& a, const AttributeDomain& b) {
    return a.values_ == b.values_ || *a.values_ == *b.values_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> values_;
};

struct Attribute {
  std::string name;
  AttributeDomain domain;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// A tuple holds one domain-value index per attribute, aligned with its
/// scheme's attribute order. Tuples compare lexicographically on those
/// indices, which is exactly the tuple-space order of the scheme.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {}

  std::size_t size() const { return indices_.size(); }
  std::uint32_t operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<std::uint32_t>& indices() const { return indices_; }

  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::vector<std::uint32_t> indices_;
};

/// Ordered list of named attributes with unique names. Copies are cheap
/// (shared immutable storage), so relations and tuples can carry schemes by
/// value.
class Scheme {
 public:
  Scheme();
  explicit Scheme(std::vector<Attribute> attributes);

  std::size_t size() const { return attrs_->size(); }
  bool empty() const { return attrs_->empty(); }
  const Attribute& attribute(std::size_t i) const { return (*attrs_)[i]; }
  const std::vector<Attribute>& attributes() const { return *attrs_; }
  std::optional<std::size_t> position_of(std::string_view name) const;

  bool conforms(const Tuple& t) const;
  void require_conforms(const Tuple& t) const;  // SchemeMismatch

  /// Product of domain sizes, saturating at UINT64_MAX.
  std::uint64_t tuple_space_size() const;

  const std::string& value_at(const Tuple& t, std::size_t position) const;
  std::string tuple_text(const Tuple& t) const;  // "v1,v2,..."
  Tuple tuple_of(const std::vector<std::string>& values) const;

  /// One-line canonical rendering: `X{a,b,c} Y{a,b}`.
  std::string str() const;

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.attrs_ == b.attrs_ || *a.attrs_ == *b.attrs_;
  }

 private:
  std::shared_ptr<const std::vector<Attribute>> attrs_;
};

Tuple first_tuple(const Scheme& scheme);
/// Odometer step in tuple-space order; returns false after the last tuple.
bool next_tuple(const Scheme& scheme, Tuple& t);
/// Every tuple on the scheme, ascending. Callers guard the size.
std::vector<Tuple> tuple_space(const Scheme& scheme);

/// positions[i] = position in `full` of sub.attribute(i). SchemeMismatch when
/// an attribute is missing from `full` or bound to a different domain.
std::vector<std::size_t> positions_in(const Scheme& sub, const Scheme& full);

Tuple project_tuple(const Tuple& t, const std::vector<std::size_t>& positions);

/// Attributes of `a` followed by attributes of `b` not named in `a`.
/// SchemeMismatch when a shared name binds different domains.
Scheme union_scheme(const Scheme& a, const Scheme& b);

/// All tuples of `full` agreeing with `t` (a tuple on `sub`) on sub's
/// attributes, in ascending order.
std::vector<Tuple> extensions(const Scheme& sub, const Tuple& t, const Scheme& full);

}  // namespace neutro
