#include "nhm/rational.hpp"

#include <cctype>

#include "nhm/errors.hpp"

namespace nhm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

const Rational& ExtRat::value() const {
  if (!is_finite()) throw PreconditionError("value() of an infinite ExtRat");
  return value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  return compare(a.value_, b.value_);
}

std::string to_string(const ExtRat& x) {
  switch (x.kind()) {
    case ExtRat::Kind::NegInf: return "-inf";
    case ExtRat::Kind::PosInf: return "inf";
    case ExtRat::Kind::Finite: break;
  }
  return to_string(x.value());
}

ExtRat parse_ext_rat(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtRat::pos_inf();
  if (text == "-inf") return ExtRat::neg_inf();
  return parse_rational(text);
}

}  // namespace nhm
