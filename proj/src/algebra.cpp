#include "taumut/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace taumut {

namespace {

constexpr std::size_t kMaxPaths = 200000;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

nlohmann::json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.modulus()}};
}

Field field_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  auto kind = j.at("kind").get<std::string>();
  if (kind == "Q" || kind == "q") return Field::rationals();
  if (kind == "Fp" || kind == "fp") return Field::prime(j.at("p").get<std::uint64_t>());
  throw std::invalid_argument("unknown field kind: " + kind);
}

// Column order for the ideal: longer paths first, then lexicographically
// larger arrow sequences, so that pivots (eliminated paths) are the larger
// ones and standard monomials stay short.
bool pivot_preferred(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.arrows != b.arrows) return a.arrows > b.arrows;
  return a.source > b.source;
}

bool basis_order(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

}  // namespace

// ---------------------------------------------------------------- spec

void AlgebraSpec::validate() const {
  if (vertices.empty()) throw std::invalid_argument("algebra has no vertices");
  if (nilpotency < 2) throw std::invalid_argument("nilpotency bound must be >= 2");
  std::set<std::string> vnames(vertices.begin(), vertices.end());
  if (vnames.size() != vertices.size())
    throw std::invalid_argument("duplicate vertex name");
  std::map<std::string, const ArrowSpec*> by_name;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
    if (!vnames.count(a.source) || !vnames.count(a.target))
      throw std::invalid_argument("arrow " + a.name + " has an undeclared endpoint");
    if (!by_name.emplace(a.name, &a).second)
      throw std::invalid_argument("duplicate arrow name " + a.name);
  }
  for (const auto& rel : relations) {
    if (rel.empty()) throw std::invalid_argument("empty relation");
    std::optional<std::pair<std::string, std::string>> ends;
    for (const auto& term : rel) {
      if (term.path.size() < 2)
        throw std::invalid_argument("relation term of length < 2 is not admissible");
      (void)Scalar::parse(field, term.coeff);
      std::string src, cur;
      for (std::size_t i = 0; i < term.path.size(); ++i) {
        auto it = by_name.find(term.path[i]);
        if (it == by_name.end())
          throw std::invalid_argument("relation uses unknown arrow " + term.path[i]);
        if (i == 0) {
          src = it->second->source;
        } else if (it->second->source != cur) {
          throw std::invalid_argument("relation path is not composable");
        }
        cur = it->second->target;
      }
      if (!ends) ends = std::make_pair(src, cur);
      else if (*ends != std::make_pair(src, cur))
        throw std::invalid_argument("relation terms are not parallel");
    }
  }
}

AlgebraSpec AlgebraSpec::opposite() const {
  AlgebraSpec op = *this;
  for (auto& a : op.arrows) std::swap(a.source, a.target);
  for (auto& rel : op.relations)
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  return op;
}

std::string AlgebraSpec::serialize() const {
  nlohmann::json j;
  j["vertices"] = vertices;
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : arrows)
    j["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  j["relations"] = nlohmann::json::array();
  for (const auto& rel : relations) {
    auto jr = nlohmann::json::array();
    for (const auto& t : rel) jr.push_back({{"coeff", t.coeff}, {"path", t.path}});
    j["relations"].push_back(jr);
  }
  j["nilpotency"] = nilpotency;
  j["field"] = field_to_json(field);
  return j.dump(2) + "\n";
}

AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra file: ") + e.what());
  }
  AlgebraSpec s;
  try {
    for (const auto& v : j.at("vertices")) {
      s.vertices.push_back(v.is_string() ? v.get<std::string>()
                                         : std::to_string(v.get<long>()));
    }
    auto name_of = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
    };
    for (const auto& a : j.at("arrows"))
      s.arrows.push_back({a.at("name").get<std::string>(), name_of(a.at("source")),
                          name_of(a.at("target"))});
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        Relation rel;
        for (const auto& t : r) {
          RelationTerm term;
          const auto& c = t.at("coeff");
          term.coeff = c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>());
          term.path = t.at("path").get<std::vector<std::string>>();
          rel.push_back(std::move(term));
        }
        s.relations.push_back(std::move(rel));
      }
    }
    s.nilpotency = j.at("nilpotency").get<std::size_t>();
    s.field = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra file: ") + e.what());
  }
  s.validate();
  return s;
}

// ---------------------------------------------------------------- quiver

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw std::invalid_argument("unknown vertex " + name);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw std::invalid_argument("unknown arrow " + name);
}

// ---------------------------------------------------------------- algebra

Algebra::Algebra(Quiver quiver, Field field, std::size_t nilpotency,
                 std::vector<PathCombination> generators,
                 std::optional<AlgebraSpec> spec)
    : quiver_(std::move(quiver)),
      field_(field),
      nilpotency_(nilpotency),
      generators_(std::move(generators)),
      spec_(std::move(spec)) {
  if (nilpotency_ < 1) throw std::invalid_argument("nilpotency bound must be >= 1");
  enumerate_paths();
  build_ideal();
}

void Algebra::enumerate_paths() {
  const std::size_t n = num_vertices();
  std::vector<std::size_t> frontier;
  for (std::size_t v = 0; v < n; ++v) {
    paths_.push_back(Path{v, v, {}});
    frontier.push_back(paths_.size() - 1);
  }
  for (std::size_t len = 1; len < nilpotency_; ++len) {
    std::vector<std::size_t> next;
    for (auto id : frontier) {
      for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
        if (quiver_.arrows[a].source != paths_[id].target) continue;
        Path p = paths_[id];
        p.arrows.push_back(a);
        p.target = quiver_.arrows[a].target;
        paths_.push_back(std::move(p));
        next.push_back(paths_.size() - 1);
        if (paths_.size() > kMaxPaths)
          throw std::invalid_argument("bounded path space too large");
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < paths_.size(); ++i)
    path_lookup_.emplace(std::make_pair(paths_[i].source, paths_[i].arrows), i);
}

std::optional<std::size_t> Algebra::path_id(const Path& p) const {
  auto it = path_lookup_.find({p.source, p.arrows});
  if (it == path_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Path> Algebra::concat(const Path& p, const Path& q) const {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

void Algebra::build_ideal() {
  const std::size_t np = paths_.size();
  // Column position of each raw path.
  std::vector<std::size_t> order(np);
  for (std::size_t i = 0; i < np; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivot_preferred(paths_[a], paths_[b]);
  });
  std::vector<std::size_t> col_of(np);
  for (std::size_t c = 0; c < np; ++c) col_of[order[c]] = c;

  // Split generators into e_v g e_w components; each lies in the ideal.
  std::vector<PathCombination> homogeneous;
  for (const auto& g : generators_) {
    std::map<std::pair<std::size_t, std::size_t>, PathCombination> parts;
    for (const auto& [c, p] : g) {
      if (c.field() != field_) throw std::invalid_argument("generator over the wrong field");
      if (c.is_zero()) continue;
      parts[{p.source, p.target}].emplace_back(c, p);
    }
    for (auto& [k, part] : parts) homogeneous.push_back(std::move(part));
  }

  std::vector<std::vector<std::size_t>> ending_at(num_vertices()), starting_at(num_vertices());
  for (std::size_t i = 0; i < np; ++i) {
    ending_at[paths_[i].target].push_back(i);
    starting_at[paths_[i].source].push_back(i);
  }

  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const auto& g : homogeneous) {
    std::size_t s = g.front().second.source, t = g.front().second.target;
    std::size_t minlen = nilpotency_;
    for (const auto& term : g) minlen = std::min(minlen, term.second.length());
    if (minlen >= nilpotency_) continue;
    for (auto pi : ending_at[s]) {
      const Path& p = paths_[pi];
      if (p.length() + minlen >= nilpotency_) continue;
      for (auto qi : starting_at[t]) {
        const Path& q = paths_[qi];
        if (p.length() + minlen + q.length() >= nilpotency_) continue;
        std::map<std::size_t, Scalar> acc;
        for (const auto& [c, mid] : g) {
          if (p.length() + mid.length() + q.length() >= nilpotency_) continue;
          Path full = *concat(*concat(p, mid), q);
          auto id = path_id(full);
          if (!id) continue;
          auto col = col_of[*id];
          auto it = acc.find(col);
          if (it == acc.end()) acc.emplace(col, c);
          else it->second = it->second + c;
        }
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (auto& [col, c] : acc)
          if (!c.is_zero()) row.emplace_back(col, c);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  Mat ideal(field_, rows.size(), np);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, c] : rows[r]) ideal.set(r, col, c);
  auto rr = rref(ideal);

  std::vector<bool> is_pivot(np, false);
  std::vector<std::size_t> pivot_row(np, 0);
  for (std::size_t k = 0; k < rr.rank; ++k) {
    is_pivot[rr.pivot_cols[k]] = true;
    pivot_row[rr.pivot_cols[k]] = k;
  }

  std::vector<std::size_t> standard;  // raw path ids
  for (std::size_t i = 0; i < np; ++i)
    if (!is_pivot[col_of[i]]) standard.push_back(i);
  std::sort(standard.begin(), standard.end(), [&](std::size_t a, std::size_t b) {
    return basis_order(paths_[a], paths_[b]);
  });
  std::vector<std::size_t> basis_of_path(np, static_cast<std::size_t>(-1));
  for (std::size_t b = 0; b < standard.size(); ++b) {
    basis_of_path[standard[b]] = b;
    basis_.push_back(paths_[standard[b]]);
  }

  path_nf_.assign(np, {});
  for (std::size_t i = 0; i < np; ++i) {
    auto col = col_of[i];
    if (!is_pivot[col]) {
      path_nf_[i].emplace_back(basis_of_path[i], Scalar::one(field_));
      continue;
    }
    auto k = pivot_row[col];
    for (std::size_t c = 0; c < np; ++c) {
      if (is_pivot[c] || rr.reduced.entry_is_zero(k, c)) continue;
      path_nf_[i].emplace_back(basis_of_path[order[c]], -rr.reduced.at(k, c));
    }
    std::sort(path_nf_[i].begin(), path_nf_[i].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }

  const std::size_t n = num_vertices();
  between_.assign(n * n, {});
  local_index_.assign(basis_.size(), 0);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    auto& bucket = between_[basis_[b].source * n + basis_[b].target];
    local_index_[b] = bucket.size();
    bucket.push_back(b);
  }
}

AlgElem Algebra::zero_element() const {
  return AlgElem(basis_.size(), Scalar::zero(field_));
}

AlgElem Algebra::idempotent(std::size_t v) const {
  return path_element(Path{v, v, {}});
}

AlgElem Algebra::arrow_element(std::size_t a) const {
  const auto& arr = quiver_.arrows.at(a);
  return path_element(Path{arr.source, arr.target, {a}});
}

AlgElem Algebra::path_element(const Path& p) const {
  AlgElem out = zero_element();
  if (p.length() >= nilpotency_) return out;
  auto id = path_id(p);
  if (!id) throw std::invalid_argument("not a path of the quiver");
  for (const auto& [b, c] : path_nf_[*id]) out[b] = c;
  return out;
}

AlgElem Algebra::reduce(const PathCombination& comb) const {
  AlgElem out = zero_element();
  for (const auto& [c, p] : comb) {
    if (p.length() >= nilpotency_ || c.is_zero()) continue;
    auto id = path_id(p);
    if (!id) throw std::invalid_argument("not a path of the quiver");
    for (const auto& [b, nc] : path_nf_[*id]) out[b] = out[b] + c * nc;
  }
  return out;
}

AlgElem Algebra::multiply_basis(std::size_t i, std::size_t j) const {
  auto p = concat(basis_[i], basis_[j]);
  if (!p) return zero_element();
  return path_element(*p);
}

AlgElem Algebra::multiply(const AlgElem& x, const AlgElem& y) const {
  AlgElem out = zero_element();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      auto p = concat(basis_[i], basis_[j]);
      if (!p || p->length() >= nilpotency_) continue;
      auto coeff = x[i] * y[j];
      for (const auto& [b, c] : path_nf_[*path_id(*p)]) out[b] = out[b] + coeff * c;
    }
  }
  return out;
}

AlgElem Algebra::add(const AlgElem& x, const AlgElem& y) const {
  AlgElem out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + y[i];
  return out;
}

AlgElem Algebra::scale(const AlgElem& x, const Scalar& s) const {
  AlgElem out = x;
  for (auto& c : out) c = c * s;
  return out;
}

bool Algebra::is_zero(const AlgElem& x) const {
  return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string Algebra::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e:" + quiver_.vertices[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ".";
    out += quiver_.arrows[p.arrows[i]].name;
  }
  return out;
}

std::string Algebra::element_string(const AlgElem& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!x[i].is_one()) out += x[i].to_string() + "*";
    out += path_name(basis_[i]);
  }
  return out.empty() ? "0" : out;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  Quiver op = quiver_;
  for (auto& a : op.arrows) std::swap(a.source, a.target);
  std::vector<PathCombination> gens;
  for (const auto& g : generators_) {
    PathCombination rg;
    for (const auto& [c, p] : g) {
      Path q{p.target, p.source, p.arrows};
      std::reverse(q.arrows.begin(), q.arrows.end());
      rg.emplace_back(c, std::move(q));
    }
    gens.push_back(std::move(rg));
  }
  std::optional<AlgebraSpec> spec;
  if (spec_) spec = spec_->opposite();
  return std::make_shared<Algebra>(std::move(op), field_, nilpotency_, std::move(gens),
                                   std::move(spec));
}

AlgebraPtr build_algebra(const AlgebraSpec& spec) {
  spec.validate();
  Quiver q;
  q.vertices = spec.vertices;
  for (const auto& a : spec.arrows)
    q.arrows.push_back({a.name, q.vertex_index(a.source), q.vertex_index(a.target)});
  std::vector<PathCombination> gens;
  for (const auto& rel : spec.relations) {
    PathCombination g;
    for (const auto& term : rel) {
      Path p;
      for (std::size_t i = 0; i < term.path.size(); ++i) {
        auto a = q.arrow_index(term.path[i]);
        if (i == 0) p.source = q.arrows[a].source;
        p.arrows.push_back(a);
        p.target = q.arrows[a].target;
      }
      g.emplace_back(Scalar::parse(spec.field, term.coeff), std::move(p));
    }
    gens.push_back(std::move(g));
  }
  return std::make_shared<Algebra>(std::move(q), spec.field, spec.nilpotency,
                                   std::move(gens), spec);
}

PathCombination parse_path_expression(const Algebra& alg, const std::string& text) {
  PathCombination out;
  std::string body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty path expression");
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : body) {
    if (ch == '+') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);
  const auto& q = alg.quiver();
  for (auto raw : terms) {
    raw = trim(raw);
    if (raw.empty()) throw std::invalid_argument("empty term in path expression");
    Scalar coeff = Scalar::one(alg.field());
    auto star = raw.find('*');
    std::string path_text = raw;
    if (star != std::string::npos) {
      coeff = Scalar::parse(alg.field(), trim(raw.substr(0, star)));
      path_text = trim(raw.substr(star + 1));
    } else if (raw[0] == '-') {
      coeff = -coeff;
      path_text = trim(raw.substr(1));
    }
    Path p;
    if (path_text.rfind("e:", 0) == 0) {
      p.source = p.target = q.vertex_index(path_text.substr(2));
    } else {
      std::stringstream ss(path_text);
      std::string name;
      bool first = true;
      while (std::getline(ss, name, '.')) {
        auto a = q.arrow_index(trim(name));
        if (first) p.source = q.arrows[a].source;
        else if (q.arrows[a].source != p.target)
          throw std::invalid_argument("path expression is not composable: " + path_text);
        p.arrows.push_back(a);
        p.target = q.arrows[a].target;
        first = false;
      }
      if (first) throw std::invalid_argument("empty path in expression");
    }
    out.emplace_back(coeff, std::move(p));
  }
  return out;
}

}  // namespace taumut
