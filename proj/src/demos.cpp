#include "nhm/demos.hpp"

#include <algorithm>

#include "nhm/errors.hpp"
#include "nhm/separation.hpp"
#include "nhm/syntax.hpp"
#include "nhm/witnesses.hpp"

namespace nhm {

namespace {

FeatherPoint fp(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return FeatherPoint::make(std::move(v));
}

MultiLinePoint dp(const Rational& x, unsigned level) { return {x, level}; }

class Script {
 public:
  Script(std::string name, std::vector<std::string> citations) {
    r_.name = std::move(name);
    r_.citations = std::move(citations);
  }

  void cert(std::string label, const Space& space, Certificate c, std::string note = {}) {
    r_.steps.push_back({std::move(label), space, std::move(c), std::move(note)});
  }
  void verdict(std::string label, const Space& space, const Verdict& v) { cert(std::move(label), space, v.certificate); }
  void note(std::string label, std::string text) {
    r_.steps.push_back({std::move(label), std::nullopt, std::nullopt, std::move(text)});
  }

  DemoReport done(std::string verdict, int exit_code = 0) {
    r_.verdict = std::move(verdict);
    r_.exit_code = exit_code;
    return std::move(r_);
  }

 private:
  DemoReport r_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

DemoReport two_origins() {
  Script s("two-origins", {"line with two origins"});
  const Space sp = SpaceSpec::two_origins();
  s.verdict("origins", sp, separable(sp, dp(0, 0), dp(0, 1)));
  s.verdict("origin and a regular point", sp, separable(sp, dp(0, 1), dp(1, 0)));
  s.verdict("two regular points", sp, separable(sp, dp(-1, 0), dp(1, 0)));
  const MaximalOpen m = maximal_hausdorff_at(sp, dp(0, 0));
  s.verdict("everything but the upper origin is Hausdorff", sp, m.hausdorff);
  s.verdict("adding the upper origin", sp, adjoin_point(sp, m.open, *m.outside));
  try {
    move(SpaceSpec::two_origins(), dp(0, 0), dp(1, 0));
  } catch (const PreconditionError& e) {
    s.note("homogeneity", e.what());
  }
  return s.done("the two origins cannot be separated");
}

DemoReport branching_line() {
  Script s("branching-line", {"branching line"});
  const Space sp = BranchingLine{};
  const BranchWitness w = branch_non_homogeneity_witness();
  s.cert("origins", sp, w.origins);
  for (const auto& sep : w.regular_separations) s.cert("regular point " + to_string(w.regular), sp, sep);
  s.note("invariant", to_string(w.origin_l) + " has a non-separable partner, " + to_string(w.regular) +
                          " has none, so no homeomorphism exchanges them");
  return s.done("not homogeneous");
}

DemoReport feather_homogeneity() {
  Script s("feather-homogeneity", {"feather: flips and translations"});
  const Space sp = FeatherSpace{};
  const FeatherPoint centre = fp({0, 1});
  for (const auto& r : {fp({0, 5}), fp({5, 7}), fp({-3}), fp({0, 0})}) {
    s.cert("flip at " + to_string(centre), sp, HomeoCert{r, flip_apply(centre, r), {Flip{centre}}, true});
  }
  s.cert("normalize", sp, feather_normalize(fp({0, 1, 3})));
  s.cert("move", sp, feather_move(fp({0, 1, 3}), fp({2, 5})));
  s.cert("move", sp, feather_move(fp({0, 0}), fp({1})));
  s.cert("disjoint branches", sp,
         SeparatedBy{fp({0, 2}), fp({1, 2}), disjoint_branch_family(0, 1, 3),
                     disjoint_branch_family(1, Rational(3, 2), 4)},
         "one open set per level-one branch, pairwise disjoint");
  return s.done("homogeneous");
}

DemoReport feather_contraction() {
  Script s("feather-contraction", {"feather: contraction homotopy"});
  const Space sp = FeatherSpace{};
  const FeatherPoint p = fp({0, 1, 3});
  for (const auto& t : {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1),
                        Rational(3, 2), Rational(2)}) {
    s.note("h_" + to_string(t), to_string(homotopy_eval(t, p)));
  }
  for (unsigned k = 1; k <= 4; ++k) {
    const SeamCheck c = homotopy_seam(p, k);
    const std::string text = "left limit " + to_string(c.left_limit) + ", right limit " +
                             to_string(c.right_limit) + ", both sides converge to " + to_string(c.at_seam) +
                             ": " + yes_no(c.continuous);
    if (c.left_limit != c.right_limit) {
      s.cert("seam t=" + to_string(c.seam), sp, TwinPair{c.left_limit, c.right_limit}, text);
    } else {
      s.note("seam t=" + to_string(c.seam), text);
    }
  }
  s.cert("fixed point", sp, TwinPair{fp({0}), fp({0, 0})},
         "a homotopy fixing F(0) cannot move its twin, so the contraction is not strong");
  return s.done("contractible, not strongly contractible");
}

DemoReport feather_twins() {
  Script s("feather-twins", {"feather: twins"});
  const Space sp = FeatherSpace{};
  s.verdict("twins", sp, separable(sp, fp({0}), fp({0, 0})));
  s.verdict("twins", sp, separable(sp, fp({0, 1}), fp({0, 1, 1})));
  const std::vector<Rational> radii{1, Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  s.note("refuter", "charts of radius 1, 1/2, 1/4, 1/8 around F(0,1) and F(0,1,1) separate them: " +
                        yes_no(refute_nonseparable(sp, fp({0, 1}), fp({0, 1, 1}), radii).has_value()));
  const SeqDescriptor below{fp({0, 0}), 1, 1, Approach::FromBelow, 1};
  const SeqDescriptor above{fp({0, 2}), 1, 1, Approach::FromAbove, 1};
  s.note("from below", "(0, 1 - 1/m) converges to F(0,1): " + yes_no(converges(sp, below, fp({0, 1}))) +
                           ", to F(0,1,1): " + yes_no(converges(sp, below, fp({0, 1, 1}))));
  s.note("from above", "(0, 1 + 1/m) converges to F(0,1): " + yes_no(converges(sp, above, fp({0, 1}))) +
                           ", to F(0,1,1): " + yes_no(converges(sp, above, fp({0, 1, 1}))));
  s.verdict("not twins", sp, separable(sp, fp({0, 1}), fp({0, 2})));
  return s.done("twins cannot be separated");
}

DemoReport doubled_line() {
  Script s("doubled-line", {"everywhere doubled line"});
  const SpaceSpec d = SpaceSpec::doubled();
  const Space sp = d;
  s.verdict("same abscissa", sp, separable(sp, dp(0, 0), dp(0, 1)));
  s.verdict("different abscissae", sp, separable(sp, dp(0, 0), dp(1, 1)));
  s.cert("move", sp, move(d, dp(0, 0), dp(1, 0)));
  s.cert("move", sp, move(d, dp(0, 0), dp(1, 1)));
  const Wave w(IntervalSet::open(Rational(0), Rational(1)), {{Rational(1, 2), 1}});
  const auto down = rational_down_dense().select(w);
  s.cert("rational down points are dense", sp, InAll{*down, {OpenHandle::of(w)}});
  for (const auto& c : up_points_discrete_witness(FinSet{Rational(0), Rational(1)}, FinSet{Rational(1, 2)})) {
    s.cert("up points are closed and discrete", sp, c);
  }
  return s.done("homogeneous, not Hausdorff");
}

DemoReport involutorial() {
  Script s("involutorial", {"involutorial homogeneity of the doubled line"});
  const SpaceSpec d = SpaceSpec::doubled();
  s.cert("swap", d, move(d, dp(0, 0), dp(1, 0), true));
  s.cert("swap", d, move(d, dp(0, 0), dp(1, 1), true));
  s.cert("swap", d, move(d, dp(0, 0), dp(0, 1), true));
  const SpaceSpec t = SpaceSpec::tripled();
  s.cert("swap", t, move(t, dp(0, 1), dp(2, 2), true));
  return s.done("involutorially homogeneous");
}

DemoReport fuks_rokhlin() {
  Script s("fuks-rokhlin", {"removing two points does not disconnect a non-Hausdorff 1-manifold"});
  const SpaceSpec t = SpaceSpec::tripled();
  for (const auto& removed : {std::vector<MultiLinePoint>{dp(0, 1), dp(0, 2)},
                              std::vector<MultiLinePoint>{dp(0, 0), dp(0, 1)}}) {
    const ChainResult r = chain_connect(t, dp(-1, 0), dp(1, 0), removed);
    if (r.chain) {
      s.cert("tripled line", t, *r.chain);
    } else {
      s.note("tripled line", "inconclusive");
    }
  }
  const SpaceSpec o = SpaceSpec::two_origins();
  const ChainResult control = chain_connect(o, dp(-1, 0), dp(1, 0), {dp(0, 0), dp(0, 1)});
  s.note("two-origins control", control.connected ? "connected" : "inconclusive: both origins removed");
  return s.done("connected after removing two points");
}

DemoReport lemma_zorn() {
  Script s("lemma-zorn", {"maximal Hausdorff dense open sets"});
  const std::vector<std::pair<Space, Point>> cases{
      {SpaceSpec::doubled(), dp(0, 1)},         {SpaceSpec::doubled(), dp(0, 0)},
      {FeatherSpace{}, fp({0, 1})},             {FeatherSpace{}, fp({0, 0})},
      {SpaceSpec::two_origins(), dp(0, 0)},     {BranchingLine{}, BranchPoint{0, Side::R}},
  };
  for (const auto& [sp, x] : cases) {
    const MaximalOpen m = maximal_hausdorff_at(sp, x);
    const std::string at = to_string(sp) + " at " + to_string(x);
    s.verdict(at + ": hausdorff", sp, m.hausdorff);
    s.verdict(at + ": dense", sp, m.dense);
    s.verdict(at + ": adding " + to_string(*m.outside), sp, adjoin_point(sp, m.open, *m.outside));
  }
  return s.done("maximal Hausdorff dense opens found");
}

DemoReport theorem2(std::string_view variant) {
  const std::string which = variant.empty() ? "line" : std::string(variant);
  Script s("theorem2", {"homogeneous Lindelof locally Hausdorff Baire manifolds are Hausdorff"});
  Space sp;
  std::vector<Point> samples;
  std::vector<Point> chosen;
  std::vector<Point> probes;
  if (which == "line") {
    sp = SpaceSpec::line();
    samples = {dp(0, 0), dp(1, 0)};
    chosen = {dp(0, 0)};
    probes = {dp(-1, 0), dp(Rational(1, 2), 0), dp(1, 0), dp(3, 0)};
  } else if (which == "doubled") {
    sp = SpaceSpec::doubled();
    samples = {dp(0, 0), dp(0, 1)};
    chosen = {dp(0, 0), dp(0, 1), dp(1, 1), dp(2, 1)};
  } else if (which == "feather") {
    sp = FeatherSpace{};
    samples = {fp({0, 1}), fp({0, 0})};
    chosen = {fp({0, 1}), fp({0, 0}), fp({1, 1})};
  } else {
    throw PreconditionError("theorem2 runs on line, doubled or feather, not '" + which + "'");
  }
  const PipelineReport rep = theorem2_pipeline(sp, samples, chosen, probes);
  for (const auto& stage : rep.stages) {
    for (const auto& c : stage.certificates) s.cert(stage.id, sp, c);
  }
  if (rep.separated_point) s.note("separate", "x0 = " + to_string(*rep.separated_point));
  return s.done(rep.verdict, rep.separated_point ? 0 : 3);
}

DemoReport lindelof_failure() {
  Script s("lindelof-failure", {"doubled line and feather are not Lindelof"});
  const Space d = SpaceSpec::doubled();
  s.verdict("doubled line", d, subcover_attempt(d, {dp(0, 0), dp(0, 1), dp(1, 1), dp(2, 1)}));
  const Space f = FeatherSpace{};
  std::vector<OpenHandle> charts;
  for (long n = 0; n <= 3; ++n) {
    for (const auto& p : {fp({n}), fp({n, n}), fp({n, n + 1})}) {
      charts.push_back(OpenHandle::of(fp_chart(p, Rational(1, 2)).interval()));
    }
  }
  std::vector<std::size_t> all(charts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  s.verdict("feather, charts of level <= 1 points", f, subcover_attempt(f, charts, all));
  for (long x = 0; x < 2; ++x) {
    s.cert("disjoint branches", f,
           SeparatedBy{fp({x, x + 2}), fp({x + 1, x + 3}), disjoint_branch_family(x, x + 1, x + 3),
                       disjoint_branch_family(x + 1, x + 2, x + 4)});
  }
  const Space line = SpaceSpec::line();
  s.verdict("ordinary line", line, subcover_attempt(line, {dp(0, 0)}));
  return s.done("not Lindelof");
}

DemoReport cofinite_not_baire() {
  Script s("cofinite-not-baire", {"quasi-compact space that is not Baire"});
  const Space c = CofiniteSpace{};
  const std::vector<CofiniteSet> cover{CofiniteSet({1}), CofiniteSet({2})};
  std::vector<OpenHandle> sub;
  for (const auto& u : quasi_compact_subcover(cover)) sub.push_back(OpenHandle::of(u));
  s.cert("finite subcover", c, Covers{sub, {CofinitePoint{0}, CofinitePoint{1}, CofinitePoint{2}, CofinitePoint{3}}});
  for (std::uint64_t n = 0; n < 2; ++n) s.verdict("D_" + std::to_string(n), c, dense(c, OpenHandle::of(CofiniteSet({n}))));
  const BaireResult r = baire_intersect(c, {{}, true}, CofiniteSet{}, 10);
  for (const auto& e : r.certificates) s.cert("intersection of all D_n", c, e);
  return s.done("EMPTY");
}

DemoReport microcompact() {
  Script s("microcompact", {"locally compact spaces are microcompact and Baire"});
  const Space d = SpaceSpec::doubled();
  const Space f = FeatherSpace{};
  const Wave v(IntervalSet::open(Rational(-1), Rational(1)), {});
  s.cert("doubled line", d, microcompact_neighborhood(d, dp(0, 0), v));
  s.cert("feather", f, microcompact_neighborhood(f, fp({0, 1}), fp_chart(fp({0, 1}), 1).interval()));
  s.cert("feather upper twin", f, microcompact_neighborhood(f, fp({0, 0}), fp_chart(fp({0, 0}), 1).interval()));
  for (const auto& c : microcompact_chain(d, dp(0, 1), Wave::around(dp(0, 1), 1), 3)) s.cert("nested", d, c);
  for (const auto& row : chart_of_implications()) {
    for (const auto& fact : row.facts) {
      const std::string label = row.label + ": " + fact.name + " " + yes_no(fact.holds);
      if (fact.certificates.empty()) s.note(label, "");
      for (const auto& c : fact.certificates) s.cert(label, row.space, c);
    }
  }
  return s.done("locally compact examples are microcompact; the cofinite space is quasi-compact, not Baire");
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{
      "two-origins",  "branching-line", "feather-homogeneity", "feather-contraction", "feather-twins",
      "doubled-line", "involutorial",   "fuks-rokhlin",        "lemma-zorn",          "theorem2",
      "lindelof-failure", "cofinite-not-baire", "microcompact"};
  return names;
}

namespace {

DemoReport dispatch(std::string_view name, std::string_view variant) {
  if (name == "two-origins") return two_origins();
  if (name == "branching-line") return branching_line();
  if (name == "feather-homogeneity") return feather_homogeneity();
  if (name == "feather-contraction") return feather_contraction();
  if (name == "feather-twins") return feather_twins();
  if (name == "doubled-line") return doubled_line();
  if (name == "involutorial") return involutorial();
  if (name == "fuks-rokhlin") return fuks_rokhlin();
  if (name == "lemma-zorn") return lemma_zorn();
  if (name == "theorem2") return theorem2(variant);
  if (name == "lindelof-failure") return lindelof_failure();
  if (name == "cofinite-not-baire") return cofinite_not_baire();
  if (name == "microcompact") return microcompact();
  throw PreconditionError("unknown demo '" + std::string(name) + "'");
}

}  // namespace

DemoReport run_demo(std::string_view name, std::string_view variant) {
  if (name != "theorem2" && !variant.empty()) throw PreconditionError("only theorem2 takes a space");
  DemoReport r = dispatch(name, variant);
  r.command = "demo " + r.name;
  if (!variant.empty()) r.command += " --space " + std::string(variant);
  return r;
}

Json report_json(const DemoReport& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    Json j{{"label", st.label}};
    if (st.certificate) {
      Json c = to_json(*st.certificate);
      j["kind"] = c["kind"];
      j["payload"] = c["payload"];
      j["verified"] = verify_certificate(*st.space, *st.certificate);
    }
    if (!st.note.empty()) j["note"] = st.note;
    steps.push_back(std::move(j));
  }
  return Json{{"command", r.command},
              {"verdict", r.verdict},
              {"certificate", std::move(steps)},
              {"citations", r.citations}};
}

std::string report_text(const DemoReport& r) {
  std::string out = r.command + "\n";
  for (const auto& st : r.steps) {
    out += "  [" + st.label + "]";
    if (st.certificate) {
      out += " " + to_string(*st.certificate);
      out += verify_certificate(*st.space, *st.certificate) ? "  (verified)" : "  (NOT VERIFIED)";
    }
    if (!st.note.empty()) out += (st.certificate ? "\n      " : " ") + st.note;
    out += "\n";
  }
  out += "verdict: " + r.verdict + "\n";
  std::string cites;
  for (const auto& c : r.citations) cites += (cites.empty() ? "" : "; ") + c;
  out += "cites: " + cites + "\n";
  return out;
}

}  // namespace nhm
