#include "nhm/feather.hpp"

#include <algorithm>

#include "nhm/errors.hpp"

namespace nhm {

namespace {

std::string tuple_text(const std::vector<Rational>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(seq[i]);
  }
  return out + ")";
}

bool has_prefix(const std::vector<Rational>& seq, const std::vector<Rational>& prefix,
                std::size_t len) {
  if (seq.size() < len || prefix.size() < len) return false;
  return std::equal(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len), seq.begin());
}

}  // namespace

FeatherPoint FeatherPoint::make(std::vector<Rational> seq) {
  if (seq.empty()) throw PreconditionError("feather point needs at least one coordinate");
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const bool last_step = i + 2 == seq.size();
    if (last_step ? seq[i] > seq[i + 1] : seq[i] >= seq[i + 1]) {
      throw PreconditionError("not a feather point: " + tuple_text(seq) +
                              " violates s_0 < ... < s_{n-1} <= s_n");
    }
  }
  return FeatherPoint(std::move(seq));
}

FeatherPoint FeatherPoint::truncated() const {
  if (seq_.size() < 2) throw PreconditionError("cannot truncate a base-line point");
  return FeatherPoint(std::vector<Rational>(seq_.begin(), seq_.end() - 1));
}

FeatherPoint FeatherPoint::with_last(const Rational& r) const {
  std::vector<Rational> s = seq_;
  s.back() = r;
  return FeatherPoint(std::move(s));
}

FeatherPoint fp_validate(std::vector<Rational> seq) { return FeatherPoint::make(std::move(seq)); }

bool fp_less(const FeatherPoint& p, const FeatherPoint& q) {
  const std::size_t n = p.depth();
  if (n > q.depth()) return false;
  if (!has_prefix(q.coords(), p.coords(), n)) return false;
  return p.coords()[n] < q.coords()[n];
}

FeatherPoint fp_twin(const FeatherPoint& p) {
  if (p.is_upper_twin()) return p.truncated();
  std::vector<Rational> s = p.coords();
  s.push_back(s.back());
  return FeatherPoint::make(std::move(s));
}

bool fp_are_twins(const FeatherPoint& p, const FeatherPoint& q) { return fp_twin(p) == q; }

FeatherInterval FeatherInterval::make(FeatherPoint lower, FeatherPoint upper) {
  if (!fp_less(lower, upper)) {
    throw PreconditionError("feather interval needs lower < upper: " + to_string(lower) + " vs " +
                            to_string(upper));
  }
  // An upper twin has the same predecessors as its partner; keep the
  // shorter one so that equal member sets have equal endpoints.
  if (upper.is_upper_twin()) upper = upper.truncated();
  return FeatherInterval(std::move(lower), std::move(upper));
}

std::vector<Segment> segments(const FeatherInterval& iv) {
  const auto& u = iv.lower().coords();
  const auto& v = iv.upper().coords();
  const std::size_t n = u.size() - 1;
  const std::size_t m = v.size() - 1;
  std::vector<Segment> out;
  out.push_back({std::vector<Rational>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)), u[n],
                 false, v[n]});
  for (std::size_t l = n + 1; l <= m; ++l) {
    if (v[l - 1] < v[l]) {
      out.push_back({std::vector<Rational>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l)),
                     v[l - 1], true, v[l]});
    }
  }
  return out;
}

std::optional<FeatherInterval> fi_meet(const FeatherInterval& a, const FeatherInterval& b) {
  // Lower ends: both are predecessors of any common member, and the
  // predecessors of a point form a chain, so they must be comparable.
  const FeatherPoint* lower = nullptr;
  if (a.lower() == b.lower() || fp_less(b.lower(), a.lower())) {
    lower = &a.lower();
  } else if (fp_less(a.lower(), b.lower())) {
    lower = &b.lower();
  } else {
    return std::nullopt;
  }

  // Upper ends: the common predecessors of two points are the predecessors
  // of the point where their ladders part.
  const auto& v1 = a.upper().coords();
  const auto& v2 = b.upper().coords();
  std::size_t l = 0;
  while (l + 1 < v1.size() && l + 1 < v2.size() && v1[l] == v2[l]) ++l;
  std::vector<Rational> z(v1.begin(), v1.begin() + static_cast<std::ptrdiff_t>(l));
  z.push_back(std::min(v1[l], v2[l]));
  FeatherPoint upper = FeatherPoint::make(std::move(z));

  if (!fp_less(*lower, upper)) return std::nullopt;
  return FeatherInterval::make(*lower, std::move(upper));
}

bool fi_subset(const FeatherInterval& inner, const FeatherInterval& outer) {
  const auto m = fi_meet(inner, outer);
  return m.has_value() && *m == inner;
}

std::optional<Rational> Chart::coord(const FeatherPoint& w) const {
  if (!contains(w)) return std::nullopt;
  return Rational(w.last() - center_.last());
}

FeatherPoint Chart::point_at(const Rational& c) const {
  if (abs(c) >= radius_) throw PreconditionError("chart coordinate out of range");
  const Rational r = center_.last() + c;
  if (center_.is_upper_twin() && c < 0) return FeatherPoint::make(center_.truncated().with_last(r).coords());
  return FeatherPoint::make(center_.with_last(r).coords());
}

Chart fp_chart(const FeatherPoint& p, const Rational& eps_in) {
  if (eps_in <= 0) throw PreconditionError("chart radius must be positive");
  Rational eps = eps_in;
  const auto& s = p.coords();
  const std::size_t n = p.depth();
  if (!p.is_upper_twin()) {
    if (n >= 1) eps = std::min(eps, Rational(s[n] - s[n - 1]));
    auto lower = FeatherPoint::make(p.with_last(s[n] - eps).coords());
    auto upper = FeatherPoint::make(p.with_last(s[n] + eps).coords());
    return Chart(p, eps, FeatherInterval::make(std::move(lower), std::move(upper)));
  }
  const Rational& c = s[n];
  if (n >= 2) eps = std::min(eps, Rational(c - s[n - 2]));
  auto lower = FeatherPoint::make(p.truncated().with_last(c - eps).coords());
  auto upper = FeatherPoint::make(p.with_last(c + eps).coords());
  return Chart(p, eps, FeatherInterval::make(std::move(lower), std::move(upper)));
}

FeatherPoint flip_apply(const FeatherPoint& s, const FeatherPoint& r) {
  const std::size_t n = s.depth();
  if (n < 1) throw PreconditionError("flip centre needs length >= 2");
  const auto& sc = s.coords();
  const auto& rc = r.coords();

  // r lies in the branch grafted at (s_0..s_{n-1}): lower it by one level.
  if (rc.size() >= n + 1 && has_prefix(rc, sc, n)) {
    std::vector<Rational> out(sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(n - 1));
    out.insert(out.end(), rc.begin() + static_cast<std::ptrdiff_t>(n), rc.end());
    return FeatherPoint::make(std::move(out));
  }
  // r continues the line through (s_0..s_{n-1}) at or past the branch point:
  // raise it into the branch.
  if (rc.size() >= n && has_prefix(rc, sc, n - 1) && rc[n - 1] >= sc[n - 1]) {
    std::vector<Rational> out(sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(n));
    out.insert(out.end(), rc.begin() + static_cast<std::ptrdiff_t>(n - 1), rc.end());
    return FeatherPoint::make(std::move(out));
  }
  return r;
}

LineNormalization normalize_to_line(const FeatherPoint& s) {
  LineNormalization out{{}, s};
  const auto& sc = s.coords();
  const std::size_t n = s.depth();
  for (std::size_t k = 0; k < n; ++k) {
    FeatherPoint centre = FeatherPoint::make(
        std::vector<Rational>(sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(n - k + 1)));
    out.result = flip_apply(centre, out.result);
    out.flips.push_back(std::move(centre));
  }
  return out;
}

FeatherPoint fp_translate(const Rational& t, const FeatherPoint& p) {
  std::vector<Rational> s = p.coords();
  for (auto& x : s) x += t;
  return FeatherPoint::make(std::move(s));
}

FeatherPoint homotopy_eval(const Rational& t, const FeatherPoint& s) {
  if (t < 0 || t > 2) throw PreconditionError("homotopy time must lie in [0, 2]");
  if (t > 1) {
    return FeatherPoint::make({Rational(s.coords()[0] - t + 1)});
  }
  FeatherPoint cur = s;
  for (;;) {
    const std::size_t n = cur.depth();
    if (n == 0 || t <= Rational(1, n + 1)) return cur;
    if (t <= Rational(1, n)) {
      // t' = n(n+1)t - n runs over [0,1]; phi pulls y >= x towards x.
      const Rational tp = Rational(n * (n + 1)) * t - Rational(n);
      const Rational& x = cur.coords()[n - 1];
      const Rational& y = cur.coords()[n];
      const Rational moved = y < x ? y : Rational((1 - tp) * y + tp * x);
      return FeatherPoint::make(cur.with_last(moved).coords());
    }
    cur = cur.truncated();
  }
}

std::vector<std::pair<Rational, FeatherPoint>> homotopy_trace(const FeatherPoint& s, unsigned steps) {
  if (steps == 0) throw PreconditionError("homotopy trace needs at least one step");
  std::vector<std::pair<Rational, FeatherPoint>> rows;
  rows.reserve(steps + 1);
  for (unsigned i = 0; i <= steps; ++i) {
    Rational t(2 * i, steps);
    t.canonicalize();
    rows.emplace_back(t, homotopy_eval(t, s));
  }
  return rows;
}

bool StrictSkeleton::contains(const FeatherPoint& p) const {
  const FeatherPoint q = conjugate_ ? flip_apply(*conjugate_, p) : p;
  return !q.is_upper_twin();
}

Chart StrictSkeleton::chart_inside(const FeatherPoint& p) const {
  if (!contains(p)) throw PreconditionError(to_string(p) + " is not in the skeleton");
  // The conjugated skeleton misses exactly one non-upper-twin point, the
  // branch point of the flip; shrink until the chart avoids it.
  Rational eps = 1;
  for (;;) {
    Chart c = fp_chart(p, eps);
    if (!conjugate_ || !c.contains(conjugate_->truncated())) return c;
    eps /= 2;
  }
}

std::pair<FeatherPoint, FeatherPoint> StrictSkeleton::maximality_witness(const FeatherPoint& u) const {
  if (contains(u)) throw PreconditionError(to_string(u) + " already lies in the skeleton");
  if (!conjugate_) return {fp_twin(u), u};
  const FeatherPoint partner = flip_apply(*conjugate_, fp_twin(flip_apply(*conjugate_, u)));
  return {partner, u};
}

StrictSkeleton strict_skeleton() { return StrictSkeleton{}; }

FeatherInterval disjoint_branch_family(const Rational& x, const Rational& a, const Rational& b) {
  if (!(x < a && a < b)) throw PreconditionError("branch family needs x < a < b");
  return FeatherInterval::make(FeatherPoint::make({x, a}), FeatherPoint::make({x, b}));
}

std::string to_string(const FeatherPoint& p) { return "F" + tuple_text(p.coords()); }

std::string to_string(const FeatherInterval& iv) {
  return "FI[" + tuple_text(iv.lower().coords()) + ";" + tuple_text(iv.upper().coords()) + "]";
}

}  // namespace nhm
