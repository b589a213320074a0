// nhm: batch queries against the non-Hausdorff manifold kernel.

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "nhm/demos.hpp"
#include "nhm/errors.hpp"
#include "nhm/json_io.hpp"
#include "nhm/separation.hpp"
#include "nhm/syntax.hpp"
#include "nhm/witnesses.hpp"

namespace {

using namespace nhm;

struct Outcome {
  std::string command;
  std::string verdict;
  int exit_code = 0;
  std::optional<Space> space;
  std::vector<Certificate> certificates;
  std::vector<std::string> lines;
  Json data;
  /// Lines are printed without indentation (CSV).
  bool plain = false;
};

template <class T>
const T& point_as(const Point& p, const char* space) {
  const T* v = std::get_if<T>(&p);
  if (v == nullptr) throw PreconditionError(to_string(p) + " is not a point of " + space);
  return *v;
}

const SpaceSpec& spec_of(const Space& s) {
  const auto* spec = std::get_if<SpaceSpec>(&s);
  if (spec == nullptr) throw PreconditionError("this verb needs a k-fold line (line, D, D3, two-origins, ...)");
  return *spec;
}

void require_feather(const Space& s) {
  if (!std::holds_alternative<FeatherSpace>(s)) throw PreconditionError("this verb needs the feather F");
}

Point point_in(const Space& s, const std::string& text) {
  Point p = parse_point(text);
  validate(s, p);
  return p;
}

void print(const Outcome& o, bool json) {
  if (json) {
    Json certs = Json::array();
    for (const auto& c : o.certificates) {
      Json j = to_json(c);
      j["verified"] = verify_certificate(*o.space, c);
      certs.push_back(std::move(j));
    }
    Json out{{"command", o.command}, {"verdict", o.verdict}};
    if (certs.empty()) {
      out["certificate"] = nullptr;
    } else if (certs.size() == 1) {
      out["certificate"] = certs.front();
    } else {
      out["certificate"] = certs;
    }
    out["citations"] = Json::array();
    if (!o.data.is_null()) out["result"] = o.data;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << o.verdict << "\n";
  for (const auto& l : o.lines) std::cout << (o.plain ? "" : "  ") << l << "\n";
  for (const auto& c : o.certificates) {
    std::cout << "certificate: " << to_string(c)
              << (verify_certificate(*o.space, c) ? "  (verified)" : "  (NOT VERIFIED)") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Queries on non-Hausdorff 1-manifolds, the feather and the cofinite space"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string space_text;
  std::vector<std::string> ops;
  std::function<Outcome()> action;

  auto verb = [&](const std::string& name, const std::string& help, std::size_t min_ops, std::size_t max_ops,
                  const std::string& ops_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("space", space_text, "F, line, D, D3, Dk, two-origins, branching, cofinite")->required();
    auto* o = sub->add_option("operands", ops, ops_help);
    if (min_ops > 0) o->required();
    o->expected(static_cast<int>(min_ops), static_cast<int>(max_ops));
    return sub;
  };

  auto* separate = verb("separate", "Decide whether two points have disjoint neighbourhoods", 2, 2, "P Q");
  separate->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const Point p = point_in(s, ops[0]);
      const Point q = point_in(s, ops[1]);
      const Verdict v = separable(s, p, q);
      return Outcome{"separate", v.holds ? "separable" : "NOT separable: twin pair", v.holds ? 0 : 3, s,
                     {v.certificate}, {}, nullptr};
    };
  });

  auto* twin = verb("twin", "Non-separable partners of a point", 1, 1, "P");
  twin->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const Point p = point_in(s, ops[0]);
      std::vector<Point> partners;
      if (const auto* f = std::get_if<FeatherPoint>(&p)) {
        partners.emplace_back(fp_twin(*f));
      } else if (const auto* m = std::get_if<MultiLinePoint>(&p)) {
        const auto& spec = spec_of(s);
        for (unsigned j = 0; j < spec.levels_at(m->x); ++j) {
          if (j != m->level) partners.emplace_back(MultiLinePoint{m->x, j});
        }
      } else if (const auto* b = std::get_if<BranchPoint>(&p)) {
        if (b->x == 0) partners.emplace_back(BranchPoint{0, b->side == Side::L ? Side::R : Side::L});
      } else {
        throw PreconditionError("in the cofinite space no two points are separable");
      }
      Outcome o{"twin", "", partners.empty() ? 3 : 0, s, {}, {}, Json::array()};
      std::string names;
      for (const auto& q : partners) {
        names += (names.empty() ? "" : ", ") + to_string(q);
        o.certificates.emplace_back(TwinPair{p, q});
        o.data.push_back(to_string(q));
      }
      o.verdict = partners.empty() ? "no non-separable partner" : "twin: " + names;
      return o;
    };
  });

  auto* flip = verb("flip", "Apply the flip h_S to R", 2, 2, "S R");
  flip->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      require_feather(s);
      const FeatherPoint c = point_as<FeatherPoint>(point_in(s, ops[0]), "F");
      const FeatherPoint r = point_as<FeatherPoint>(point_in(s, ops[1]), "F");
      if (c.depth() == 0) throw PreconditionError("flip centres need length >= 2");
      const FeatherPoint out = flip_apply(c, r);
      return Outcome{"flip", to_string(out), 0, s, {HomeoCert{r, out, {Flip{c}}, true}}, {}, to_string(out)};
    };
  });

  auto* normalize = verb("normalize", "Flip word carrying a feather point to the base line", 1, 1, "P");
  normalize->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      require_feather(s);
      const HomeoCert h = feather_normalize(point_as<FeatherPoint>(point_in(s, ops[0]), "F"));
      return Outcome{"normalize", to_string(h.to), 0, s, {h}, {to_string(h.word)}, to_string(h.to)};
    };
  });

  std::string t_text;
  bool csv = false;
  unsigned steps = 8;
  auto* homotopy = verb("homotopy", "Evaluate the contraction homotopy of F", 1, 1, "P");
  homotopy->add_option("--t", t_text, "Time in [0,2]");
  homotopy->add_flag("--csv", csv, "Print the trace t, h_t(P) as CSV");
  homotopy->add_option("--steps", steps, "Trace steps over [0,2]");
  homotopy->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      require_feather(s);
      const FeatherPoint p = point_as<FeatherPoint>(point_in(s, ops[0]), "F");
      if (csv) {
        Outcome o{"homotopy", "t,point", 0, s, {}, {}, Json::array(), true};
        for (const auto& [t, q] : homotopy_trace(p, steps)) {
          o.lines.push_back(to_string(t) + ",\"" + to_string(q) + "\"");
          o.data.push_back({to_string(t), to_string(q)});
        }
        return o;
      }
      if (t_text.empty()) throw PreconditionError("homotopy needs --t or --csv");
      const FeatherPoint q = homotopy_eval(parse_rational(t_text), p);
      return Outcome{"homotopy", to_string(q), 0, s, {}, {}, to_string(q)};
    };
  });

  auto* chart = verb("chart", "Canonical chart neighbourhood of radius EPS", 2, 2, "P EPS");
  chart->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const Point p = point_in(s, ops[0]);
      const Rational eps = parse_rational(ops[1]);
      Outcome o{"chart", "", 0, s, {}, {}, nullptr};
      BasicOpen b = neighborhood(s, p, eps);
      if (const auto* f = std::get_if<FeatherPoint>(&p)) {
        const Chart c = fp_chart(*f, eps);
        o.lines.push_back("radius " + to_string(c.radius()) + ", coordinate r - " + to_string(f->last()));
      }
      o.verdict = to_string(b);
      o.data = to_string(b);
      const Verdict h = hausdorff_open(s, OpenHandle::of(b));
      o.certificates.push_back(h.certificate);
      return o;
    };
  });

  auto* meet_cmd = verb("meet", "Intersection of two basic opens", 2, 2, "B1 B2");
  meet_cmd->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const BasicOpen a = parse_basic(ops[0]);
      const BasicOpen b = parse_basic(ops[1]);
      const OpenSet m = meet(s, a, b);
      Outcome o{"meet", to_string(m), 0, s, {}, {}, to_string(m)};
      if (!m.empty()) {
        const BaireResult r = baire_intersect(s, {}, m.front());
        if (r.point) o.certificates.emplace_back(InAll{*r.point, {OpenHandle::of(a), OpenHandle::of(b)}});
      }
      return o;
    };
  });

  auto* dense_cmd = verb("dense", "Density of a union of basics (or the skeleton)", 1, 1000, "PIECE...");
  dense_cmd->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      std::string joined;
      for (const auto& x : ops) joined += (joined.empty() ? "" : "|") + x;
      const OpenHandle u = parse_handle(joined);
      const Verdict v = dense(s, u);
      return Outcome{"dense", v.holds ? "dense" : "NOT dense", v.holds ? 0 : 3, s, {v.certificate}, {}, nullptr};
    };
  });

  std::string base_text;
  std::string limit_text;
  std::string from = "below";
  std::string scale_text = "1";
  std::optional<std::size_t> index;
  auto* conv = verb("converges", "Does a parametric sequence converge to P", 1, 1, "P");
  conv->add_option("--base", base_text, "Point whose moving coordinate is replaced")->required();
  conv->add_option("--limit", limit_text, "Limit of the moving coordinate")->required();
  conv->add_option("--from", from, "Approach side")->check(CLI::IsMember({"below", "above"}));
  conv->add_option("--index", index, "Moving coordinate (default: last)");
  conv->add_option("--scale", scale_text, "Step size numerator, 0 for a constant sequence");
  conv->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const Point p = point_in(s, ops[0]);
      const Point base = point_in(s, base_text);
      SeqDescriptor d{base, 0, parse_rational(limit_text),
                      from == "below" ? Approach::FromBelow : Approach::FromAbove, parse_rational(scale_text)};
      if (const auto* f = std::get_if<FeatherPoint>(&base)) d.index = f->depth();
      if (index) d.index = *index;
      const bool c = converges(s, d, p);
      Outcome o{"converges", c ? "converges" : "does NOT converge", c ? 0 : 3, s, {}, {}, c};
      for (unsigned long m = 1; m <= 3; ++m) o.lines.push_back("term " + std::to_string(m) + ": " + to_string(term(s, d, m)));
      return o;
    };
  });

  bool involutive = false;
  auto* move_cmd = verb("move", "Homeomorphism word taking P to Q", 2, 2, "P Q");
  move_cmd->add_flag("--involutive", involutive, "Ask for an involution swapping P and Q");
  move_cmd->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const Point p = point_in(s, ops[0]);
      const Point q = point_in(s, ops[1]);
      const HomeoCert h = [&] {
        if (!std::holds_alternative<FeatherSpace>(s)) {
          return move(spec_of(s), point_as<MultiLinePoint>(p, "a k-fold line"),
                      point_as<MultiLinePoint>(q, "a k-fold line"), involutive);
        }
        if (involutive) throw PreconditionError("involutive words are built on k-fold lines only");
        return feather_move(std::get<FeatherPoint>(p), std::get<FeatherPoint>(q));
      }();
      return Outcome{"move", to_string(h.word), 0, s, {h}, {}, to_json(h.word)};
    };
  });

  std::vector<std::string> removed_text;
  std::string window_text;
  auto* chain = verb("chain", "Chain of waves joining SRC to DST avoiding removed points", 2, 2, "SRC DST");
  chain->add_option("--remove", removed_text, "Removed point (repeatable)");
  chain->add_option("--window", window_text, "Bounded search window (a,b)");
  chain->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const auto& spec = spec_of(s);
      const auto src = point_as<MultiLinePoint>(point_in(s, ops[0]), "a k-fold line");
      const auto dst = point_as<MultiLinePoint>(point_in(s, ops[1]), "a k-fold line");
      std::vector<MultiLinePoint> removed;
      for (const auto& r : removed_text) removed.push_back(point_as<MultiLinePoint>(point_in(s, r), "a k-fold line"));
      std::optional<Interval> window;
      if (!window_text.empty()) {
        const IntervalSet w = parse_interval_set(window_text);
        if (w.intervals().size() != 1) throw ParseError("window must be one interval");
        window = w.intervals().front();
      }
      const ChainResult r = chain_connect(spec, src, dst, removed, window);
      if (!r.chain) return Outcome{"chain", "inconclusive", 3, s, {}, {}, nullptr};
      return Outcome{"chain", "connected by " + std::to_string(r.chain->links.size()) + " wave(s)", 0, s,
                     {*r.chain}, {}, nullptr};
    };
  });

  auto* maximal = verb("maximal-hausdorff", "Maximal Hausdorff dense open set through P", 1, 1, "P");
  maximal->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const MaximalOpen m = maximal_hausdorff_at(s, point_in(s, ops[0]));
      Outcome o{"maximal-hausdorff", to_string(m.open), 0, s, {m.hausdorff.certificate, m.dense.certificate}, {},
                to_string(m.open)};
      if (m.outside) {
        o.lines.push_back("adding " + to_string(*m.outside) + " breaks Hausdorffness");
        o.certificates.push_back(adjoin_point(s, m.open, *m.outside).certificate);
      }
      return o;
    };
  });

  auto* subcover = verb("subcover", "Do the maximal opens at the listed points cover the space", 0, 100000, "P...");
  subcover->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      std::vector<Point> chosen;
      for (const auto& x : ops) chosen.push_back(point_in(s, x));
      const Verdict v = subcover_attempt(s, chosen);
      std::string verdict = "covered";
      if (!v.holds) verdict = "NOT covered: " + to_string(std::get<Uncovered>(v.certificate).point) + " is uncovered";
      return Outcome{"subcover", verdict, v.holds ? 0 : 3, s, {v.certificate}, {}, nullptr};
    };
  });

  std::string probe_text;
  std::uint64_t candidates = 10;
  auto* baire = verb("baire", "A point of PROBE in every listed dense open (cofinite: the family N-{n})", 0, 1000,
                     "HANDLE...");
  baire->add_option("--probe", probe_text, "Basic open to search in");
  baire->add_option("--candidates", candidates, "Candidates certified for the cofinite family");
  baire->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      DenseFamily fam;
      for (const auto& h : ops) fam.members.push_back(parse_handle(h));
      if (std::holds_alternative<CofiniteSpace>(s) && fam.members.empty()) fam.cofinite_singletons = true;
      const BasicOpen probe = probe_text.empty() ? BasicOpen{CofiniteSet{}} : parse_basic(probe_text);
      if (probe_text.empty() && !fam.cofinite_singletons) throw PreconditionError("baire needs --probe");
      const BaireResult r = baire_intersect(s, fam, probe, candidates);
      if (r.point) return Outcome{"baire", to_string(*r.point), 0, s, r.certificates, {}, to_string(*r.point)};
      return Outcome{"baire", fam.cofinite_singletons ? "EMPTY" : "no point found", 3, s, r.certificates, {}, nullptr};
    };
  });

  auto* micro = verb("microcompact", "Compact chart neighbourhood of P inside V", 2, 2, "P V");
  micro->callback([&] {
    action = [&] {
      const Space s = parse_space(space_text);
      const CompactCert c = microcompact_neighborhood(s, point_in(s, ops[0]), parse_basic(ops[1]));
      return Outcome{"microcompact", "[" + to_string(c.a) + "," + to_string(c.b) + "]", 0, s, {c}, {}, nullptr};
    };
  });

  std::string demo_name;
  std::string demo_space;
  CLI::App* demo = app.add_subcommand("demo", "Run a scripted scenario");
  demo->add_option("name", demo_name, "Scenario")->required()->check(CLI::IsMember(demo_names()));
  demo->add_option("--space", demo_space, "theorem2 only: line, doubled or feather");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool json = format == "json";
  try {
    if (demo->parsed()) {
      const DemoReport r = run_demo(demo_name, demo_space);
      if (json) {
        std::cout << report_json(r).dump(2) << "\n";
      } else {
        std::cout << report_text(r);
      }
      return r.exit_code;
    }
    const Outcome o = action();
    print(o, json);
    return o.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  }
}
