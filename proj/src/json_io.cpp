#include "nhm/json_io.hpp"

#include "nhm/syntax.hpp"

namespace nhm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class T>
Json strings(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json to_json(const Move& m) {
  return std::visit(overloaded{
                        [](const Flip& f) { return Json{{"gen", "flip"}, {"at", to_string(f.at)}}; },
                        [](const Shift& s) { return Json{{"gen", "shift"}, {"by", to_string(s.by)}}; },
                        [](const Exchange& e) {
                          return Json{{"gen", "exchange"}, {"at", to_string(e.at)}, {"levels", {e.first, e.second}}};
                        },
                        [](const Reflect& r) { return Json{{"gen", "reflect"}, {"about", to_string(r.about)}}; },
                    },
                    m);
}

Json to_json(const HomeoWord& w) {
  Json out = Json::array();
  for (const auto& m : w) out.push_back(to_json(m));
  return out;
}

Json to_json(const Certificate& cert) {
  Json payload = std::visit(
      overloaded{
          [](const SeparatedBy& c) {
            return Json{{"p", to_string(c.p)},
                        {"q", to_string(c.q)},
                        {"around_p", to_string(c.around_p)},
                        {"around_q", to_string(c.around_q)}};
          },
          [](const TwinPair& c) { return Json{{"p", to_string(c.p)}, {"q", to_string(c.q)}}; },
          [](const Uncovered& c) { return Json{{"point", to_string(c.point)}, {"opens", strings(c.opens)}}; },
          [](const ExcludedBy& c) { return Json{{"candidate", c.candidate}, {"index", c.index}}; },
          [](const Chain& c) {
            return Json{{"src", to_string(c.src)},
                        {"dst", to_string(c.dst)},
                        {"removed", strings(c.removed)},
                        {"links", strings(c.links)}};
          },
          [](const HomeoCert& c) {
            return Json{{"from", to_string(c.from)},
                        {"to", to_string(c.to)},
                        {"involutive", c.involutive},
                        {"word", to_json(c.word)}};
          },
          [](const CompactCert& c) {
            return Json{{"center", to_string(c.center)},
                        {"chart_radius", to_string(c.chart_radius)},
                        {"interval", {to_string(c.a), to_string(c.b)}},
                        {"neighborhood", to_string(c.neighborhood)}};
          },
          [](const Avoids& c) {
            return Json{{"probe", to_string(c.probe)}, {"witness", to_string(c.witness)}, {"set", to_string(c.set)}};
          },
          [](const InAll& c) { return Json{{"point", to_string(c.point)}, {"opens", strings(c.opens)}}; },
          [](const Isolates& c) {
            return Json{{"point", to_string(c.point)}, {"open", to_string(c.open)}, {"others", strings(c.others)}};
          },
          [](const Covers& c) { return Json{{"opens", strings(c.opens)}, {"probes", strings(c.probes)}}; },
          [](const Criterion& c) { return Json{{"rule", c.rule}, {"subject", to_string(c.subject)}}; },
      },
      cert);
  return Json{{"kind", kind_name(cert)}, {"payload", std::move(payload)}};
}

}  // namespace nhm
