#include "neutro/grade.hpp"

#include <cctype>
#include <numeric>

#include "neutro/error.hpp"

namespace neutro {

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxFractionDigits = 18;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  if (!all_digits(s)) fail(ErrorKind::ParseError, "expected digits in " + std::string(what));
  if (s.size() > 18) fail(ErrorKind::ParseError, std::string(what) + " has too many digits");
  std::int64_t v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Grade::Grade(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) fail(ErrorKind::ParseError, "grade denominator must be positive");
  if (numerator < 0 || numerator > denominator)
    fail(ErrorKind::GradeOutOfRange,
         "grade " + std::to_string(numerator) + "/" + std::to_string(denominator) +
             " outside [0, 1]");
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Grade Grade::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) fail(ErrorKind::ParseError, "empty grade");

  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_int(text.substr(0, slash), "fraction numerator");
    den = parse_int(text.substr(slash + 1), "fraction denominator");
    if (den == 0) fail(ErrorKind::ParseError, "fraction denominator is zero");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) fail(ErrorKind::ParseError, "missing digits after decimal point");
    if (static_cast<std::int64_t>(frac.size()) > kMaxFractionDigits)
      fail(ErrorKind::ParseError, "more than 18 fractional digits");
    const std::int64_t w = parse_int(whole, "integer part");
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = parse_int(frac, "fractional part");
    // w <= 10^18 and den <= 10^18: detect overflow of w*den before it happens.
    if (w > 1) fail(ErrorKind::GradeOutOfRange, "grade " + std::string(text) + " outside [0, 1]");
    num += w * den;
  } else {
    num = parse_int(text, "grade");
  }
  if (negative && num != 0)
    fail(ErrorKind::GradeOutOfRange, "grade -" + std::string(text) + " outside [0, 1]");
  if (num > den) fail(ErrorKind::GradeOutOfRange, "grade " + std::string(text) + " outside [0, 1]");
  return Grade(num, den);
}

Grade Grade::complement() const {
  Grade g;
  g.num_ = den_ - num_;  // gcd(den-num, den) == gcd(num, den) == 1
  g.den_ = den_;
  return g;
}

bool Grade::on_grid(std::int64_t k) const { return k >= 1 && k % den_ == 0; }

std::string Grade::str() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  // Terminating decimal iff the denominator is of the form 2^a * 5^b.
  std::int64_t rest = den_;
  while (rest % 2 == 0) rest /= 2;
  while (rest % 5 == 0) rest /= 5;
  if (rest != 1)
    return std::to_string(num_) + "/" + std::to_string(den_);
  std::string out = "0.";
  std::int64_t r = num_;
  while (r != 0) {
    const i128 scaled = static_cast<i128>(r) * 10;
    out.push_back(static_cast<char>('0' + static_cast<std::int64_t>(scaled / den_)));
    r = static_cast<std::int64_t>(scaled % den_);
  }
  return out;
}

std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int sum_vs_one(const Grade& a, const Grade& b) {
  const i128 lhs = static_cast<i128>(a.numerator()) * b.denominator() +
                   static_cast<i128>(b.numerator()) * a.denominator();
  const i128 rhs = static_cast<i128>(a.denominator()) * b.denominator();
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace neutro
