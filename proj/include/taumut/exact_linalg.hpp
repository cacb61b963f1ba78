#pragma once

// Exact dense linear algebra over Q (GMP rationals) and prime fields F_p.
//
// A Mat carries its field tag; every binary operation checks that the tags
// agree. Nothing in here ever touches floating point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace taumut {

class Field {
 public:
  Field() = default;  // Q
  static Field rationals() { return Field(); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // "q", "Q", "fp:7", "Fp:7".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  // 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const Field& f, long v);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t value, std::uint64_t p);
  static Scalar residue(const Field& f, std::uint64_t value);
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  // Parses "3", "-2/5" over Q; integers (reduced mod p) or "a/b" over F_p.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Only meaningful for the matching field tag.
  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_ints(const Field& f, std::size_t rows, std::size_t cols,
                       std::initializer_list<long> row_major);
  static Mat from_ints(const Field& f,
                       const std::vector<std::vector<long>>& rows);
  // Column vector.
  static Mat column_vector(const std::vector<Scalar>& entries,
                           const Field& f);
  // [a b ...] side by side; all inputs share the row count.
  static Mat hstack(const std::vector<Mat>& parts, const Field& f,
                    std::size_t rows);
  // Stacked vertically; all inputs share the column count.
  static Mat vstack(const std::vector<Mat>& parts, const Field& f,
                    std::size_t cols);
  // Block diagonal.
  static Mat block_diagonal(const std::vector<Mat>& parts, const Field& f);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long v);
  bool entry_is_zero(std::size_t r, std::size_t c) const;
  // Adds v * (r,c) in place.
  void add_to(std::size_t r, std::size_t c, const Scalar& v);

  bool is_zero() const;
  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr,
            std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat column(std::size_t c) const { return block(0, c, rows_, 1); }
  Mat columns(const std::vector<std::size_t>& idx) const;
  Mat rows_subset(const std::vector<std::size_t>& idx) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  bool operator==(const Mat& o) const;

  // Flattens column-major into a single column vector.
  Mat vectorize() const;
  // Row-major integer view; throws unless every entry is an integer (Q) or
  // for F_p returns the canonical residues.
  std::vector<std::vector<long>> to_ints() const;

  std::string to_string() const;

  // Raw storage access for the elimination kernels.
  std::vector<mpq_class>& q_data() { return q_; }
  const std::vector<mpq_class>& q_data() const { return q_; }
  std::vector<std::uint64_t>& r_data() { return r_; }
  const std::vector<std::uint64_t>& r_data() const { return r_; }

 private:
  void check_same(const Mat& o, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint64_t> r_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

struct RrefResult {
  std::size_t rank = 0;
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

// Any particular solution X of m * X = rhs, or nullopt when inconsistent.
// Throws std::invalid_argument when the row counts differ.
std::optional<Mat> solve(const Mat& m, const Mat& rhs);

// Basis of the right null space, one column vector per element.
std::vector<Mat> kernel_basis(const Mat& m);
// Same basis packed as the columns of a single matrix (cols(m) x nullity).
Mat kernel_matrix(const Mat& m);

Scalar determinant(const Mat& m);

// Linearly independent columns spanning the column space of m, in reduced
// form (columns of the transposed rref).
Mat column_space(const Mat& m);

// Coordinates j such that span(columns of m) + span{e_j} is everything and
// the sum is direct.
std::vector<std::size_t> complement_coordinates(const Mat& m);

// Whether column vector v lies in the column span of m.
bool in_column_span(const Mat& m, const Mat& v);

}  // namespace taumut
