#pragma once

// Bound quiver algebras KQ/I realised inside the finite space of paths of
// length < N. Paths compose left to right: "a.b" means a then b, and right
// modules are representations with one linear map per arrow.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taumut/exact_linalg.hpp"

namespace taumut {

struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
  bool operator==(const ArrowSpec&) const = default;
};

struct RelationTerm {
  std::string coeff;               // exact rational, e.g. "1", "-3/2"
  std::vector<std::string> path;   // arrow names, left to right
  bool operator==(const RelationTerm&) const = default;
};

using Relation = std::vector<RelationTerm>;

struct AlgebraSpec {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<Relation> relations;
  std::size_t nilpotency = 2;
  Field field;

  bool operator==(const AlgebraSpec&) const = default;

  // Structural validation: unique names, declared endpoints, parallel
  // relation paths of length >= 2, N >= 2. Throws std::invalid_argument.
  void validate() const;

  // Reverses every arrow and every relation path.
  AlgebraSpec opposite() const;

  // Canonical structured text (JSON, sorted keys, two-space indent,
  // trailing newline). parse(serialize(s)) == s and the text is a fixed
  // point of serialize(parse(.)).
  std::string serialize() const;
  static AlgebraSpec parse(const std::string& text);
};

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
};

// A path in the quiver: a source vertex and a (possibly empty) arrow
// sequence. The empty sequence is the idempotent at the source.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

// A linear combination of paths (not yet reduced modulo the ideal).
using PathCombination = std::vector<std::pair<Scalar, Path>>;

// Coordinates over Algebra::basis().
using AlgElem = std::vector<Scalar>;

class Algebra {
 public:
  // Builds KQ/I with I generated by `generators` inside paths of length < N.
  Algebra(Quiver quiver, Field field, std::size_t nilpotency,
          std::vector<PathCombination> generators,
          std::optional<AlgebraSpec> spec = std::nullopt);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  std::size_t num_arrows() const { return quiver_.arrows.size(); }
  std::size_t nilpotency() const { return nilpotency_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::optional<AlgebraSpec>& spec() const { return spec_; }
  const std::vector<PathCombination>& generators() const { return generators_; }

  // Standard monomials: residue classes of paths forming a K-basis.
  const std::vector<Path>& basis() const { return basis_; }
  // Basis indices of standard paths from v to w, i.e. a basis of e_v A e_w.
  const std::vector<std::size_t>& basis_between(std::size_t v,
                                                std::size_t w) const {
    return between_[v * num_vertices() + w];
  }
  // Position of basis index b within basis_between(source, target).
  std::size_t local_index(std::size_t b) const { return local_index_[b]; }

  AlgElem zero_element() const;
  AlgElem idempotent(std::size_t v) const;
  AlgElem arrow_element(std::size_t a) const;
  // Residue class of a single path; zero when the path is too long.
  AlgElem path_element(const Path& p) const;
  AlgElem reduce(const PathCombination& c) const;
  AlgElem multiply(const AlgElem& x, const AlgElem& y) const;
  AlgElem multiply_basis(std::size_t i, std::size_t j) const;
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem scale(const AlgElem& x, const Scalar& s) const;
  bool is_zero(const AlgElem& x) const;

  // Composable concatenation (no reduction); nullopt if endpoints mismatch.
  std::optional<Path> concat(const Path& p, const Path& q) const;
  std::string path_name(const Path& p) const;
  std::string element_string(const AlgElem& x) const;

  // All raw paths of the bounded path space (length < N).
  const std::vector<Path>& path_space() const { return paths_; }

  std::shared_ptr<const Algebra> opposite() const;

 private:
  void enumerate_paths();
  void build_ideal();
  std::optional<std::size_t> path_id(const Path& p) const;

  Quiver quiver_;
  Field field_;
  std::size_t nilpotency_;
  std::vector<PathCombination> generators_;
  std::optional<AlgebraSpec> spec_;

  std::vector<Path> paths_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_lookup_;
  // Sparse normal form of each raw path over the basis.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> path_nf_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> local_index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates and builds. Errors on non-admissible relations or inconsistent
// endpoints (std::invalid_argument).
AlgebraPtr build_algebra(const AlgebraSpec& spec);

// Parses "a.b + -2*c.d" style expressions; "e:1" denotes the idempotent of
// vertex 1. Terms are separated by '+', an optional "coeff*" prefix scales.
PathCombination parse_path_expression(const Algebra& alg,
                                      const std::string& text);

}  // namespace taumut
