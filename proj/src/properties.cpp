#include "taumut/properties.hpp"

#include <algorithm>
#include <set>

#include "taumut/endo.hpp"
#include "taumut/grothendieck.hpp"
#include "taumut/smc.hpp"

namespace taumut {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }
  void fail(const std::string& why) {
    if (r_.passed) r_.detail = why;
    r_.passed = false;
  }
  PropertyResult done() { return r_; }

 private:
  PropertyResult r_;
};

std::string at(std::size_t v) { return "vertex " + std::to_string(v); }
std::string at(const ExchangeArrow& a) {
  return "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target);
}

}  // namespace

PropertyReport check_properties(TauTiltingEngine& engine, const ExchangeQuiver& q) {
  PropertyReport rep;
  auto& reg = engine.registry();
  const std::size_t n = engine.rank();

  Recorder complete("complete exploration");
  if (!q.complete) complete.fail("depth or size limit reached");
  rep.results.push_back(complete.done());
  if (!q.complete) return rep;

  Recorder ends("unique source and sink");
  {
    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (q.in_arrows(v).empty()) sources.push_back(v);
      if (q.out_arrows(v).empty()) sinks.push_back(v);
    }
    SupportPair zero;
    for (std::size_t v = 0; v < n; ++v) zero.support_complement.push_back(v);
    if (sources.size() != 1 || q.vertices[sources[0]] != engine.initial_pair())
      ends.fail("source is not unique or not (A, 0)");
    if (sinks.size() != 1 || q.vertices[sinks[0]] != zero) ends.fail("sink is not unique or not (0, A)");
  }
  rep.results.push_back(ends.done());

  Recorder pairs("support tau-tilting vertices");
  Recorder degree("degree law");
  Recorder size("semibrick size bound");
  Recorder injective("semibrick injectivity");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const auto& p = q.vertices[v];
    if (!engine.is_support_tau_tilting(p)) pairs.fail(at(v));
    auto sb = engine.semibrick_of(p);
    if (q.in_arrows(v).size() + q.out_arrows(v).size() != n) degree.fail(at(v) + ": in + out != n");
    if (q.out_arrows(v).size() != sb.size()) degree.fail(at(v) + ": out-degree != |semibrick|");
    if (sb.size() > n) size.fail(at(v));
    std::vector<Module> bricks;
    for (auto id : sb) bricks.push_back(reg.module(id));
    if (!is_semibrick(bricks)) size.fail(at(v) + ": not a semibrick");
    std::sort(sb.begin(), sb.end());
    if (!seen.insert(sb).second) injective.fail(at(v) + " repeats a semibrick");
  }
  rep.results.push_back(pairs.done());
  rep.results.push_back(degree.done());
  rep.results.push_back(size.done());
  rep.results.push_back(injective.done());

  Recorder sandwich("label sandwich");
  Recorder cosocle("socle label coincidence");
  for (const auto& a : q.arrows) {
    const Module& s = reg.module(a.label);
    Module src = engine.module_of(q.vertices[a.source]);
    Module dst = engine.module_of(q.vertices[a.target]);
    if (!is_brick(s)) sandwich.fail(at(a) + ": label is not a brick");
    if (!in_fac(s, src)) sandwich.fail(at(a) + ": label outside Fac of the source");
    if (hom_dim(dst, s) != 0) sandwich.fail(at(a) + ": Hom(target, label) != 0");
    if (!in_fac(dst, src) || in_fac(src, dst)) sandwich.fail(at(a) + ": Fac does not shrink strictly");
    auto co = engine.cosemibrick_of(q.vertices[a.target]);
    if (std::find(co.begin(), co.end(), a.label) == co.end())
      cosocle.fail(at(a) + ": label missing from the socle bricks of the target");
  }
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (engine.cosemibrick_of(q.vertices[v]).size() != q.in_arrows(v).size())
      cosocle.fail(at(v) + ": in-degree != number of socle bricks");
  rep.results.push_back(sandwich.done());
  rep.results.push_back(cosocle.done());

  Recorder smc("smc axioms");
  Recorder duality("g/c duality");
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    try {
      auto x = smc_of_vertex(engine, q.vertices[v]);
      auto r = check_smc_axioms(x);
      if (!r.ok()) smc.fail(at(v) + ": " + r.violations.front());
    } catch (const std::exception& e) {
      smc.fail(at(v) + ": " + e.what());
    }
    auto d = check_duality_at(engine, q.vertices[v]);
    if (!d.ok()) duality.fail(at(v) + ": " + (d.notes.empty() ? "" : d.notes.front()));
  }
  rep.results.push_back(smc.done());
  rep.results.push_back(duality.done());

  Recorder coincide("smc label coincidence");
  try {
    auto r = check_label_coincidence(engine, q);
    if (!r.ok()) coincide.fail(r.failures.front());
  } catch (const std::exception& e) {
    coincide.fail(e.what());
  }
  rep.results.push_back(coincide.done());
  return rep;
}

}  // namespace taumut
