#include "nhm/syntax.hpp"

#include <cctype>

#include "nhm/errors.hpp"

namespace nhm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).substr(0, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  /// Sign, then digits, letters and slashes: a rational or an infinity.
  std::string_view token() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) != 0 || text_[end] == '/')) {
      ++end;
    }
    if (end == pos_) fail("expected a number");
    const std::string_view tok = text_.substr(pos_, end - pos_);
    pos_ = end;
    return tok;
  }

  Rational rational() { return parse_rational(token()); }
  ExtRat ext() { return parse_ext_rat(token()); }

  unsigned long natural() {
    const Rational q = rational();
    if (q < 0 || q.get_den() != 1 || !q.get_num().fits_ulong_p()) fail("expected a natural number");
    return q.get_num().get_ui();
  }

  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }

  void finish() {
    if (!done()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Rational> tuple(Cursor& c) {
  c.expect("(");
  std::vector<Rational> out{c.rational()};
  while (c.eat(",")) out.push_back(c.rational());
  c.expect(")");
  return out;
}

FinSet finset(Cursor& c) {
  c.expect("{");
  std::vector<Rational> out;
  if (!c.eat("}")) {
    do {
      out.push_back(c.rational());
    } while (c.eat(","));
    c.expect("}");
  }
  return FinSet(std::move(out));
}

IntervalSet interval_set(Cursor& c) {
  if (c.eat("empty")) return {};
  std::vector<Interval> parts;
  do {
    c.expect("(");
    ExtRat lo = c.ext();
    c.expect(",");
    ExtRat hi = c.ext();
    c.expect(")");
    if (!(lo < hi)) c.fail("empty interval");
    parts.push_back({std::move(lo), std::move(hi)});
  } while (c.eat("u"));
  return IntervalSet(std::move(parts));
}

CofiniteSet cofinite_set(Cursor& c) {
  if (c.eat("cofinite-empty")) return CofiniteSet::empty_set();
  c.expect("cofinite-excl");
  c.expect("{");
  std::vector<std::uint64_t> out;
  if (!c.eat("}")) {
    do {
      out.push_back(c.natural());
    } while (c.eat(","));
    c.expect("}");
  }
  return CofiniteSet(std::move(out));
}

Side side(Cursor& c) {
  if (c.eat("L")) return Side::L;
  if (c.eat("R")) return Side::R;
  c.fail("expected side L or R");
}

unsigned level(Cursor& c) {
  const unsigned long l = c.natural();
  if (l > 1000) c.fail("level out of range");
  return static_cast<unsigned>(l);
}

/// `{0^1,2^2}` or `{0,2}^1`; a missing level means 1.
std::map<Rational, unsigned> lifts(Cursor& c) {
  c.expect("{");
  std::vector<std::pair<Rational, std::optional<unsigned>>> raw;
  if (!c.eat("}")) {
    do {
      Rational x = c.rational();
      std::optional<unsigned> l;
      if (c.eat("^")) l = level(c);
      raw.emplace_back(std::move(x), l);
    } while (c.eat(","));
    c.expect("}");
  }
  unsigned group = 1;
  if (c.eat("^")) group = level(c);
  std::map<Rational, unsigned> out;
  for (auto& [x, l] : raw) {
    if (!out.emplace(x, l.value_or(group)).second) c.fail("abscissa lifted twice");
  }
  return out;
}

Point point(Cursor& c) {
  if (c.eat("F")) return FeatherPoint::make(tuple(c));
  if (c.eat("D(")) {
    Rational x = c.rational();
    unsigned l = 0;
    if (c.eat("@")) l = level(c);
    c.expect(")");
    return MultiLinePoint{std::move(x), l};
  }
  if (c.eat("B(")) {
    Rational x = c.rational();
    c.expect("@");
    const Side s = side(c);
    c.expect(")");
    return BranchPoint::make(std::move(x), s);
  }
  if (c.eat("N(")) {
    const unsigned long n = c.natural();
    c.expect(")");
    return CofinitePoint{n};
  }
  c.fail("expected a point F(..), D(..), B(..) or N(..)");
}

BasicOpen basic(Cursor& c) {
  if (c.eat("FI[")) {
    auto lo = FeatherPoint::make(tuple(c));
    c.expect(";");
    auto hi = FeatherPoint::make(tuple(c));
    c.expect("]");
    return FeatherInterval::make(std::move(lo), std::move(hi));
  }
  if (c.eat("W[")) {
    IntervalSet base = interval_set(c);
    std::map<Rational, unsigned> lift;
    if (c.eat("-")) lift = lifts(c);
    c.expect("]");
    return Wave(std::move(base), std::move(lift));
  }
  if (c.eat("BI[")) {
    if (c.eat("empty")) {
      c.expect("]");
      return BranchInterval::make(ExtRat(0), ExtRat(0), Side::L);
    }
    c.expect("(");
    ExtRat lo = c.ext();
    c.expect(",");
    ExtRat hi = c.ext();
    c.expect(")");
    c.expect("@");
    const Side s = side(c);
    c.expect("]");
    return BranchInterval::make(std::move(lo), std::move(hi), s);
  }
  return cofinite_set(c);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string list_text(const std::vector<T>& items) {
  std::vector<std::string> parts;
  parts.reserve(items.size());
  for (const auto& x : items) parts.push_back(to_string(x));
  return "[" + join(parts, ", ") + "]";
}

}  // namespace

FinSet parse_finset(std::string_view text) {
  Cursor c(text);
  FinSet s = finset(c);
  c.finish();
  return s;
}

IntervalSet parse_interval_set(std::string_view text) {
  Cursor c(text);
  IntervalSet s = interval_set(c);
  c.finish();
  return s;
}

CofiniteSet parse_cofinite_set(std::string_view text) {
  Cursor c(text);
  CofiniteSet s = cofinite_set(c);
  c.finish();
  return s;
}

Space parse_space(std::string_view text) {
  if (text == "F" || text == "feather") return FeatherSpace{};
  if (text == "line") return SpaceSpec::line();
  if (text == "two-origins") return SpaceSpec::two_origins();
  if (text == "branching") return BranchingLine{};
  if (text == "cofinite") return CofiniteSpace{};
  if (text == "D" || text == "doubled") return SpaceSpec::doubled();
  if (text == "tripled") return SpaceSpec::tripled();
  Cursor c(text);
  if (c.eat("D")) {
    const unsigned long k = c.natural();
    if (k < 1 || k > 1000) c.fail("fibre count out of range");
    SpaceSpec spec{static_cast<unsigned>(k), std::nullopt};
    if (c.eat("@")) spec.domain = finset(c);
    c.finish();
    return spec;
  }
  throw ParseError("unknown space '" + std::string(text) + "'");
}

Point parse_point(std::string_view text) {
  Cursor c(text);
  Point p = point(c);
  c.finish();
  return p;
}

BasicOpen parse_basic(std::string_view text) {
  Cursor c(text);
  BasicOpen b = basic(c);
  c.finish();
  return b;
}

OpenHandle parse_handle(std::string_view text) {
  Cursor c(text);
  OpenHandle u;
  if (c.eat("empty")) {
    c.finish();
    return u;
  }
  do {
    if (c.eat("skeleton")) {
      if (u.skeleton) c.fail("skeleton given twice");
      std::optional<FeatherPoint> conj;
      if (c.eat("^")) {
        Point p = point(c);
        if (!std::holds_alternative<FeatherPoint>(p)) c.fail("skeleton conjugate must be a feather point");
        conj = std::get<FeatherPoint>(std::move(p));
        if (conj->depth() == 0) c.fail("skeleton conjugate needs length >= 2");
      }
      u.skeleton = StrictSkeleton(std::move(conj));
    } else {
      u.basics.push_back(basic(c));
    }
  } while (c.eat("|"));
  c.finish();
  return u;
}

std::string to_string(const Space& s) {
  return std::visit(overloaded{
                        [](const FeatherSpace&) -> std::string { return "F"; },
                        [](const SpaceSpec& spec) { return to_string(spec); },
                        [](const BranchingLine&) -> std::string { return "branching"; },
                        [](const CofiniteSpace&) -> std::string { return "cofinite"; },
                    },
                    s);
}

std::string to_string(const CofinitePoint& p) { return "N(" + std::to_string(p.n) + ")"; }

std::string to_string(const Point& p) {
  return std::visit([](const auto& x) { return to_string(x); }, p);
}

std::string to_string(const BasicOpen& b) {
  return std::visit([](const auto& x) { return to_string(x); }, b);
}

std::string to_string(const OpenSet& s) {
  if (s.empty()) return "empty";
  std::vector<std::string> parts;
  for (const auto& b : s) parts.push_back(to_string(b));
  return join(parts, " | ");
}

std::string to_string(const OpenHandle& u) {
  std::vector<std::string> parts;
  if (u.skeleton) {
    parts.push_back(u.skeleton->conjugate() ? "skeleton^" + to_string(*u.skeleton->conjugate()) : "skeleton");
  }
  for (const auto& b : u.basics) parts.push_back(to_string(b));
  if (parts.empty()) return "empty";
  return join(parts, " | ");
}

std::string to_string(const Move& m) {
  return std::visit(overloaded{
                        [](const Flip& f) { return "flip " + to_string(f.at); },
                        [](const Shift& s) { return "shift " + to_string(s.by); },
                        [](const Exchange& e) {
                          return "exchange " + to_string(e.at) + " " + std::to_string(e.first) + "<->" +
                                 std::to_string(e.second);
                        },
                        [](const Reflect& r) { return "reflect " + to_string(r.about); },
                    },
                    m);
}

std::string to_string(const HomeoWord& w) { return list_text(w); }

std::string to_string(const Certificate& cert) {
  return std::visit(
      overloaded{
          [](const SeparatedBy& c) {
            return "SeparatedBy " + to_string(c.p) + " in " + to_string(c.around_p) + " ; " + to_string(c.q) +
                   " in " + to_string(c.around_q);
          },
          [](const TwinPair& c) { return "TwinPair " + to_string(c.p) + " ~ " + to_string(c.q); },
          [](const Uncovered& c) {
            return "Uncovered " + to_string(c.point) + " outside all " + std::to_string(c.opens.size()) +
                   " chosen opens";
          },
          [](const ExcludedBy& c) {
            return "ExcludedBy " + std::to_string(c.candidate) + " not in " +
                   to_string(CofiniteSet({c.index}));
          },
          [](const Chain& c) {
            return "Chain " + to_string(c.src) + " -> " + to_string(c.dst) + " avoiding " + list_text(c.removed) +
                   " via " + list_text(c.links);
          },
          [](const HomeoCert& c) {
            return std::string(c.involutive ? "HomeoWord (involutive) " : "HomeoWord ") + to_string(c.from) +
                   " -> " + to_string(c.to) + " by " + to_string(c.word);
          },
          [](const CompactCert& c) {
            return "CompactCert [" + to_string(c.a) + "," + to_string(c.b) + "] in the chart of " +
                   to_string(c.center) + " of radius " + to_string(c.chart_radius) + " inside " +
                   to_string(c.neighborhood);
          },
          [](const Avoids& c) {
            return "Avoids " + to_string(c.probe) + " holds " + to_string(c.witness) + " and misses " +
                   to_string(c.set);
          },
          [](const InAll& c) {
            return "InAll " + to_string(c.point) + " lies in " + list_text(c.opens);
          },
          [](const Isolates& c) {
            return "Isolates " + to_string(c.point) + " by " + to_string(c.open) + " from " + list_text(c.others);
          },
          [](const Covers& c) {
            return "Covers " + std::to_string(c.probes.size()) + " probes by " + std::to_string(c.opens.size()) +
                   " opens";
          },
          [](const Criterion& c) { return "Criterion " + c.rule + " holds on " + to_string(c.subject); },
      },
      cert);
}

}  // namespace nhm
