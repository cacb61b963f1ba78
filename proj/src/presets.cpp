#include "taumut/presets.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace taumut::presets {

namespace {

std::vector<std::string> numbered_vertices(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

// Every path of length l in a quiver whose arrow i leaves vertex i.
std::vector<Relation> monomials(const std::vector<ArrowSpec>& arrows, std::size_t l) {
  std::vector<Relation> out;
  std::vector<std::vector<std::string>> paths;
  for (const auto& a : arrows) paths.push_back({a.name});
  for (std::size_t len = 1; len < l; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& p : paths) {
      std::string tail;
      for (const auto& a : arrows)
        if (a.name == p.back()) tail = a.target;
      for (const auto& a : arrows)
        if (a.source == tail) {
          auto q = p;
          q.push_back(a.name);
          next.push_back(std::move(q));
        }
    }
    paths = std::move(next);
  }
  for (auto& p : paths) out.push_back({RelationTerm{"1", std::move(p)}});
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& whole) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad preset parameter in " + whole);
  }
}

}  // namespace

AlgebraSpec a_path(std::size_t n, Field f) {
  if (n == 0) throw std::invalid_argument("a-path needs n >= 1");
  AlgebraSpec s;
  s.vertices = numbered_vertices(n);
  for (std::size_t i = 1; i < n; ++i)
    s.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  s.nilpotency = std::max<std::size_t>(n, 2);
  s.field = f;
  return s;
}

AlgebraSpec nakayama_linear(std::size_t n, std::size_t l, Field f) {
  if (n == 0 || l == 0) throw std::invalid_argument("Nakayama parameters must be positive");
  AlgebraSpec s;
  s.vertices = numbered_vertices(n);
  s.field = f;
  if (l == 1) {
    s.nilpotency = 2;
    return s;
  }
  for (std::size_t i = 1; i < n; ++i)
    s.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  s.relations = monomials(s.arrows, l);
  s.nilpotency = l;
  return s;
}

AlgebraSpec nakayama_cyclic(std::size_t n, std::size_t l, Field f) {
  if (n == 0 || l == 0) throw std::invalid_argument("Nakayama parameters must be positive");
  AlgebraSpec s;
  s.vertices = numbered_vertices(n);
  s.field = f;
  if (l == 1) {
    s.nilpotency = 2;
    return s;
  }
  for (std::size_t i = 1; i <= n; ++i)
    s.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i % n + 1)});
  s.relations = monomials(s.arrows, l);
  s.nilpotency = l;
  return s;
}

AlgebraSpec preprojective_a(std::size_t n, Field f) {
  if (n == 0 || n > 4) throw std::invalid_argument("preprojective preset supports 1 <= n <= 4");
  AlgebraSpec s;
  s.vertices = numbered_vertices(n);
  s.field = f;
  s.nilpotency = std::max<std::size_t>(n, 2);
  if (n == 1) return s;
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  auto b = [](std::size_t i) { return "b" + std::to_string(i); };
  for (std::size_t i = 1; i < n; ++i) {
    s.arrows.push_back({a(i), std::to_string(i), std::to_string(i + 1)});
    s.arrows.push_back({b(i), std::to_string(i + 1), std::to_string(i)});
  }
  s.relations.push_back({{"1", {a(1), b(1)}}});
  for (std::size_t i = 2; i < n; ++i)
    s.relations.push_back({{"1", {b(i - 1), a(i - 1)}}, {"-1", {a(i), b(i)}}});
  s.relations.push_back({{"1", {b(n - 1), a(n - 1)}}});
  return s;
}

AlgebraSpec two_arrow_example(Field f) {
  AlgebraSpec s;
  s.vertices = numbered_vertices(3);
  s.arrows = {{"alpha", "1", "2"}, {"beta", "1", "2"}, {"gamma", "2", "3"}};
  s.relations = {{{"1", {"alpha", "gamma"}}}};
  s.nilpotency = 3;
  s.field = f;
  return s;
}

AlgebraSpec by_name(const std::string& name, Field f) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty preset name");
  const auto& head = parts[0];
  if (head == "a-path" && parts.size() == 2) return a_path(parse_size(parts[1], name), f);
  if (head == "nakayama" && parts.size() == 4) {
    auto n = parse_size(parts[2], name), l = parse_size(parts[3], name);
    if (parts[1] == "linear") return nakayama_linear(n, l, f);
    if (parts[1] == "cyclic") return nakayama_cyclic(n, l, f);
  }
  if (head == "preproj-a" && parts.size() == 2) return preprojective_a(parse_size(parts[1], name), f);
  if (head == "msex" && parts.size() == 1) return two_arrow_example(f);
  if (head == "a3-figure" && parts.size() == 1) return a_path(3, f);
  throw std::invalid_argument("unknown preset " + name);
}

}  // namespace taumut::presets
