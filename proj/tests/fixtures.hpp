#pragma once

#include "taumut/algebra.hpp"

namespace fixtures {

inline taumut::AlgebraSpec linear_a3(taumut::Field f = {}) {
  taumut::AlgebraSpec s;
  s.vertices = {"1", "2", "3"};
  s.arrows = {{"a", "1", "2"}, {"b", "2", "3"}};
  s.nilpotency = 3;
  s.field = f;
  return s;
}

inline taumut::AlgebraSpec kronecker(taumut::Field f = {}) {
  taumut::AlgebraSpec s;
  s.vertices = {"1", "2"};
  s.arrows = {{"x", "1", "2"}, {"y", "1", "2"}};
  s.nilpotency = 2;
  s.field = f;
  return s;
}

}  // namespace fixtures

#include <set>
#include <string>

#include "taumut/tau_tilting.hpp"

namespace fixtures {

inline std::set<std::string> dim_set(taumut::TauTiltingEngine& e,
                                     const std::vector<std::size_t>& ids) {
  std::set<std::string> out;
  for (auto id : ids) out.insert(e.registry().module(id).dim_string());
  return out;
}

inline std::set<std::string> dim_set(const std::vector<taumut::Module>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.dim_string());
  return out;
}

}  // namespace fixtures
