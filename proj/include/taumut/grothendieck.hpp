#pragma once

// g-vectors of support tau-tilting pairs, c-vectors of the matching
// two-term simple-minded collections and the pairing G^T D C = D'.

#include <string>
#include <vector>

#include "taumut/tau_tilting.hpp"

namespace taumut {

// Square integer matrix stored by columns: cols[k][i] is row i of column k.
struct IntMatrix {
  std::vector<std::vector<long>> cols;
  std::size_t size() const { return cols.size(); }
  long at(std::size_t i, std::size_t k) const { return cols[k][i]; }
  bool operator==(const IntMatrix&) const = default;
};

long determinant(const IntMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix diagonal(const std::vector<long>& d);
// Invariant factors of a diagonal matrix, ascending.
std::vector<long> smith_form_of_diagonal(std::vector<long> d);

// Column k: [P^0] - [P^-1] of the k-th silting summand. Module summands in
// the pair's order first, then -[P_v] for the support complement.
IntMatrix g_matrix(TauTiltingEngine& engine, const SupportPair& pair);

struct CMatrix {
  IntMatrix c;
  std::vector<long> end_dims;  // dim End of each collection member
};

// Column k: signed dimension vector of the collection member paired with
// silting summand k.
CMatrix c_matrix(TauTiltingEngine& engine, const SupportPair& pair);

// dim End of each simple module.
std::vector<long> simple_end_dims(const AlgebraPtr& alg);

struct DualityReport {
  bool product_ok = false;
  long det_g = 0;
  long det_c = 0;
  bool unimodular = false;
  bool smith_equal = false;
  bool pairing_ok = false;
  // D and D' disagree as multisets; recorded, not a failure.
  bool diagonal_mismatch = false;
  std::vector<std::string> notes;
  bool ok() const { return product_ok && unimodular && smith_equal && pairing_ok; }
};

DualityReport check_duality(const IntMatrix& g, const CMatrix& c, const std::vector<long>& d);
// Adds the module-level pairing check Hom(P_k, X_k) != 0.
DualityReport check_duality_at(TauTiltingEngine& engine, const SupportPair& pair);

}  // namespace taumut
