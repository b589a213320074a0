#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nhm {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// `p/q` in lowest terms, integers without `/1`.
std::string to_string(const Rational& q);

/// Accepts `p`, `-p`, `p/q`. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Rational number extended with -inf and +inf.
///
/// Total order: -inf < every finite value < +inf. Arithmetic is only defined
/// on finite values; callers check `is_finite()` first.
class ExtRat {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRat() = default;
  ExtRat(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long v) : value_(v) {}             // NOLINT(google-explicit-constructor)

  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// Throws PreconditionError on an infinity.
  const Rational& value() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  explicit ExtRat(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

std::string to_string(const ExtRat& x);

/// Accepts the rational syntax plus `inf`, `+inf`, `-inf`.
ExtRat parse_ext_rat(std::string_view text);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace nhm
