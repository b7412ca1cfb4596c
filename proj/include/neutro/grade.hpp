#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace neutro {

/// Exact rational confidence grade in [0, 1].
///
/// Always kept in lowest terms, so equality is plain member equality and
/// serialization is canonical. The algebra only ever compares grades, takes
/// min/max, or complements them (1 - g), none of which grow numerators or
/// denominators past what construction supplied; int64 components with
/// __int128 comparison intermediates are therefore exact, not approximate.
class Grade {
 public:
  constexpr Grade() = default;  // zero
  Grade(std::int64_t numerator, std::int64_t denominator);

  /// Accepts a plain decimal ("0.35", "1", up to 18 fractional digits) or a
  /// fraction "p/q". Throws ParseError on malformed text and GradeOutOfRange
  /// when the value falls outside [0, 1].
  static Grade parse(std::string_view text);

  static Grade zero() { return {}; }
  static Grade one() { return Grade(1, 1); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  Grade complement() const;  // 1 - g

  /// True when the grade lies on {0, 1/k, ..., 1}.
  bool on_grid(std::int64_t k) const;

  /// Shortest exact decimal when the expansion terminates, else "p/q".
  std::string str() const;

  friend bool operator==(const Grade&, const Grade&) = default;
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Sign of (a + b) - 1: negative, zero, or positive. Belief/doubt sums are
/// only ever compared against 1, never stored, so no Grade addition exists.
int sum_vs_one(const Grade& a, const Grade& b);

}  // namespace neutro
