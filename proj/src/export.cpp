#include "taumut/export.hpp"

#include <sstream>

#include "json.hpp"
#include "taumut/grothendieck.hpp"

namespace taumut {

namespace {

std::string vertex_label(TauTiltingEngine& engine, const SupportPair& p) {
  std::string s;
  for (auto id : p.summands) {
    if (!s.empty()) s += " ";
    s += engine.registry().module(id).dim_string();
  }
  if (s.empty()) s = "0";
  if (!p.support_complement.empty()) {
    s += " |";
    for (auto v : p.support_complement) s += " " + engine.algebra()->quiver().vertices[v];
  }
  return s;
}

nlohmann::json rows_of(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string export_dot(TauTiltingEngine& engine, const ExchangeQuiver& q) {
  std::ostringstream out;
  out << "digraph exchange {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << vertex_label(engine, q.vertices[v]) << "\"];\n";
  for (const auto& a : q.arrows)
    out << "  v" << a.source << " -> v" << a.target << " [label=\""
        << engine.registry().module(a.label).dim_string() << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_records(TauTiltingEngine& engine, const ExchangeQuiver& q,
                           const ExportOptions& opts) {
  using nlohmann::json;
  auto& reg = engine.registry();
  json doc;
  doc["complete"] = q.complete;
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const auto& p = q.vertices[v];
    json rec;
    rec["id"] = v;
    rec["depth"] = q.depth[v];
    rec["summand_dim_vectors"] = json::array();
    for (auto id : p.summands) rec["summand_dim_vectors"].push_back(reg.module(id).dim_string());
    rec["support_complement"] = json::array();
    for (auto c : p.support_complement)
      rec["support_complement"].push_back(engine.algebra()->quiver().vertices[c]);
    if (opts.smc) {
      json smc{{"degree0", json::array()}, {"degree_minus1", json::array()}};
      for (const auto& sb : engine.smc_of(p))
        smc[sb.shifted ? "degree_minus1" : "degree0"].push_back(reg.module(sb.brick).dim_string());
      rec["smc"] = smc;
    }
    if (opts.matrices) {
      rec["g_matrix"] = rows_of(g_matrix(engine, p));
      auto c = c_matrix(engine, p);
      rec["c_matrix"] = rows_of(c.c);
      rec["end_dims"] = c.end_dims;
    }
    doc["vertices"].push_back(rec);
  }
  doc["arrows"] = json::array();
  for (const auto& a : q.arrows)
    doc["arrows"].push_back(
        {{"src", a.source}, {"dst", a.target}, {"label_dim_vector", reg.module(a.label).dim_string()}});
  return doc.dump(2) + "\n";
}

}  // namespace taumut
