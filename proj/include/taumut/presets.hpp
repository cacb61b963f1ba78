#pragma once

// Named algebra presentations used by the CLI and the test-suite.

#include <string>

#include "taumut/algebra.hpp"

namespace taumut::presets {

// Linearly oriented A_n: 1 -> 2 -> ... -> n, no relations.
AlgebraSpec a_path(std::size_t n, Field f = {});
// Linear Nakayama algebra A_{n,l}: arrows i -> i+1, all paths of length l vanish.
AlgebraSpec nakayama_linear(std::size_t n, std::size_t l, Field f = {});
// Cyclic Nakayama algebra B_{n,l}: arrows i -> i+1 mod n, paths of length l vanish.
AlgebraSpec nakayama_cyclic(std::size_t n, std::size_t l, Field f = {});
// Preprojective algebra of A_n (n <= 4).
AlgebraSpec preprojective_a(std::size_t n, Field f = {});
// Three vertices, double arrow 1 => 2, arrow 2 -> 3, alpha.gamma = 0.
AlgebraSpec two_arrow_example(Field f = {});

// "a-path:3", "nakayama:linear:4:2", "nakayama:cyclic:3:3", "preproj-a:3",
// "msex", "a3-figure". Throws std::invalid_argument.
AlgebraSpec by_name(const std::string& name, Field f = {});

}  // namespace taumut::presets
