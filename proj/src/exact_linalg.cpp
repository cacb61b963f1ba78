#include "taumut/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace taumut {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_long(long v, std::uint64_t p) {
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return static_cast<std::uint64_t>(m);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Arithmetic policies for the templated kernels.
struct QArith {
  using T = mpq_class;
  std::vector<T>& data(Mat& m) const { return m.q_data(); }
  const std::vector<T>& data(const Mat& m) const { return m.q_data(); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T inv(const T& a) const { return 1 / a; }
  // a -= f * b
  void sub_mul(T& a, const T& f, const T& b) const { a -= f * b; }
  void mul_assign(T& a, const T& f) const { a *= f; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  void add_assign(T& a, const T& b) const { a += b; }
  T one() const { return T(1); }
};

struct PArith {
  using T = std::uint64_t;
  std::uint64_t p;
  std::vector<T>& data(Mat& m) const { return m.r_data(); }
  const std::vector<T>& data(const Mat& m) const { return m.r_data(); }
  bool is_zero(T a) const { return a == 0; }
  T inv(T a) const { return mod_inv(a, p); }
  void sub_mul(T& a, T f, T b) const { a = (a + p - f * b % p) % p; }
  void mul_assign(T& a, T f) const { a = a * f % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const { return a * b % p; }
  void add_assign(T& a, T b) const { a = (a + b) % p; }
  T one() const { return 1; }
};

template <class F>
decltype(auto) with_arith(const Field& field, F&& fn) {
  if (field.is_rational()) return fn(QArith{});
  return fn(PArith{field.modulus()});
}

// In-place Gauss-Jordan on a row-major buffer. Returns pivot columns.
template <class A>
std::vector<std::size_t> rref_kernel(const A& ar, std::vector<typename A::T>& a,
                                     std::size_t rows, std::size_t cols,
                                     std::size_t pivot_col_limit,
                                     std::size_t* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < pivot_col_limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ar.is_zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[piv * cols + j], a[r * cols + j]);
      if (swaps) ++*swaps;
    }
    auto inv = ar.inv(a[r * cols + c]);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!ar.is_zero(a[r * cols + j])) {
        ar.mul_assign(a[r * cols + j], inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ar.is_zero(a[i * cols + c])) continue;
      typename A::T f = a[i * cols + c];
      for (std::size_t j : nz) ar.sub_mul(a[i * cols + j], f, a[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    if (head == "fp" || head == "Fp" || head == "FP") {
      std::uint64_t p = 0;
      try {
        p = std::stoull(text.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad field modulus in '" + text + "'");
      }
      return prime(p);
    }
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Field& f, long v) : field_(f) {
  if (f.is_rational())
    q_ = v;
  else
    r_ = reduce_long(v, f.modulus());
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
  Scalar s;
  s.field_ = Field::prime(p);
  s.r_ = value % p;
  return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t value) {
  if (f.is_rational()) throw std::invalid_argument("residue over Q");
  Scalar s;
  s.field_ = f;
  s.r_ = value % f.modulus();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  if (f.is_rational()) return rational(q);
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw std::invalid_argument("denominator of '" + text + "' vanishes mod " +
                                std::to_string(f.modulus()));
  Scalar n = residue(f, num.get_ui());
  Scalar d = residue(f, den.get_ui());
  return n / d;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

namespace {
void same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("scalar field mismatch: " + a.field().name() +
                                " vs " + b.field().name());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  same_field(*this, o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.modulus();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  same_field(*this, o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ *= o.q_;
  else
    s.r_ = r_ * o.r_ % field_.modulus();
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, field_.modulus());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

// ---------------------------------------------------------------- Mat

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.is_rational())
    q_.assign(rows * cols, mpq_class(0));
  else
    r_.assign(rows * cols, 0);
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                   std::initializer_list<long> row_major) {
  if (row_major.size() != rows * cols)
    throw std::invalid_argument("from_ints: entry count mismatch");
  Mat m(f, rows, cols);
  std::size_t k = 0;
  for (long v : row_major) {
    m.set(k / cols, k % cols, v);
    ++k;
  }
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw std::invalid_argument("from_ints: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::column_vector(const std::vector<Scalar>& entries, const Field& f) {
  Mat m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Mat Mat::hstack(const std::vector<Mat>& parts, const Field& f,
                std::size_t rows) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    total += p.cols();
  }
  Mat m(f, rows, total);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Mat Mat::vstack(const std::vector<Mat>& parts, const Field& f,
                std::size_t cols) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    total += p.rows();
  }
  Mat m(f, total, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Mat Mat::block_diagonal(const std::vector<Mat>& parts, const Field& f) {
  std::size_t nr = 0, nc = 0;
  for (const auto& p : parts) {
    nr += p.rows();
    nc += p.cols();
  }
  Mat m(f, nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return Scalar::rational(q_[r * cols_ + c]);
  return Scalar::residue(field_, r_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_))
    throw std::invalid_argument("Mat::set: field mismatch");
  if (field_.is_rational())
    q_[r * cols_ + c] = v.rational_value();
  else
    r_[r * cols_ + c] = v.residue_value();
}

void Mat::set(std::size_t r, std::size_t c, long v) {
  if (field_.is_rational())
    q_[r * cols_ + c] = v;
  else
    r_[r * cols_ + c] = reduce_long(v, field_.modulus());
}

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
  return field_.is_rational() ? sgn(q_[r * cols_ + c]) == 0
                              : r_[r * cols_ + c] == 0;
}

void Mat::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (field_.is_rational())
    q_[r * cols_ + c] += v.rational_value();
  else
    r_[r * cols_ + c] = (r_[r * cols_ + c] + v.residue_value()) % field_.modulus();
}

bool Mat::is_zero() const {
  if (field_.is_rational())
    return std::all_of(q_.begin(), q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
  return std::all_of(r_.begin(), r_.end(), [](std::uint64_t x) { return x == 0; });
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational())
        t.q_[j * rows_ + i] = q_[i * cols_ + j];
      else
        t.r_[j * rows_ + i] = r_[i * cols_ + j];
    }
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("Mat::block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (field_.is_rational())
        b.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
      else
        b.r_[i * nc + j] = r_[(r0 + i) * cols_ + c0 + j];
    }
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  check_same(b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw std::out_of_range("Mat::set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (field_.is_rational())
        q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
      else
        r_[(r0 + i) * cols_ + c0 + j] = b.r_[i * b.cols_ + j];
    }
}

Mat Mat::columns(const std::vector<std::size_t>& idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    out.set_block(0, k, column(idx[k]));
  return out;
}

Mat Mat::rows_subset(const std::vector<std::size_t>& idx) const {
  Mat out(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    out.set_block(k, 0, block(idx[k], 0, 1, cols_));
  return out;
}

void Mat::check_same(const Mat& o, const char* op) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument(std::string(op) + ": field mismatch " +
                                field_.name() + " vs " + o.field_.name());
}

Mat Mat::operator*(const Mat& o) const {
  check_same(o, "operator*");
  if (cols_ != o.rows_)
    throw std::invalid_argument("operator*: dimension mismatch " +
                                std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
  Mat out(field_, rows_, o.cols_);
  with_arith(field_, [&](auto ar) {
    auto& dst = ar.data(out);
    const auto& a = ar.data(*this);
    const auto& b = ar.data(o);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& aik = a[i * cols_ + k];
        if (ar.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const auto& bkj = b[k * o.cols_ + j];
          if (ar.is_zero(bkj)) continue;
          ar.add_assign(dst[i * o.cols_ + j], ar.mul(aik, bkj));
        }
      }
    return 0;
  });
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  check_same(o, "operator+");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("operator+: dimension mismatch");
  Mat out = *this;
  with_arith(field_, [&](auto ar) {
    auto& dst = ar.data(out);
    const auto& b = ar.data(o);
    for (std::size_t i = 0; i < dst.size(); ++i) ar.add_assign(dst[i], b[i]);
    return 0;
  });
  return out;
}

Mat Mat::operator-() const {
  Mat out = *this;
  with_arith(field_, [&](auto ar) {
    for (auto& x : ar.data(out)) x = ar.neg(x);
    return 0;
  });
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw std::invalid_argument("scaled: field mismatch");
  Mat out = *this;
  if (field_.is_rational()) {
    for (auto& x : out.q_) x *= s.rational_value();
  } else {
    for (auto& x : out.r_) x = x * s.residue_value() % field_.modulus();
  }
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         q_ == o.q_ && r_ == o.r_;
}

Mat Mat::vectorize() const {
  Mat v(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) {
      if (field_.is_rational())
        v.q_[j * rows_ + i] = q_[i * cols_ + j];
      else
        v.r_[j * rows_ + i] = r_[i * cols_ + j];
    }
  return v;
}

std::vector<std::vector<long>> Mat::to_ints() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rational()) {
        const auto& x = q_[i * cols_ + j];
        if (x.get_den() != 1 || !x.get_num().fits_slong_p())
          throw std::domain_error("to_ints: non-integer entry " + x.get_str());
        out[i][j] = x.get_num().get_si();
      } else {
        out[i][j] = static_cast<long>(r_[i * cols_ + j]);
      }
    }
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  return os << m.to_string();
}

// ---------------------------------------------------------------- algorithms

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  with_arith(m.field(), [&](auto ar) {
    res.pivot_cols = rref_kernel(ar, ar.data(res.reduced), m.rows(), m.cols(), m.cols());
    return 0;
  });
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
  if (m.rows() != rhs.rows())
    throw std::invalid_argument("solve: row count mismatch (" +
                                std::to_string(m.rows()) + " vs " +
                                std::to_string(rhs.rows()) + ")");
  if (!(m.field() == rhs.field())) throw std::invalid_argument("solve: field mismatch");
  const Field& f = m.field();
  Mat aug = Mat::hstack({m, rhs}, f, m.rows());
  std::vector<std::size_t> pivots;
  with_arith(f, [&](auto ar) {
    pivots = rref_kernel(ar, ar.data(aug), aug.rows(), aug.cols(), aug.cols());
    return 0;
  });
  Mat x(f, m.cols(), rhs.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    std::size_t c = pivots[k];
    if (c >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.set(c, j, aug.at(k, m.cols() + j));
  }
  return x;
}

Mat kernel_matrix(const Mat& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::size_t nullity = m.cols() - r.rank;
  Mat k(f, m.cols(), nullity);
  std::size_t col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k.set(free, col, 1);
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
      if (r.reduced.entry_is_zero(row, free)) continue;
      k.set(r.pivot_cols[row], col, -r.reduced.at(row, free));
    }
    ++col;
  }
  return k;
}

std::vector<Mat> kernel_basis(const Mat& m) {
  Mat k = kernel_matrix(m);
  std::vector<Mat> out;
  out.reserve(k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.column(j));
  return out;
}

Scalar determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const Field& f = m.field();
  if (m.rows() == 0) return Scalar::one(f);
  // Plain elimination, tracking the product of pivots.
  Mat a = m;
  std::size_t n = m.rows();
  Scalar det = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a.entry_is_zero(i, c)) {
        piv = i;
        break;
      }
    if (piv == n) return Scalar::zero(f);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = a.at(piv, j);
        a.set(piv, j, a.at(c, j));
        a.set(c, j, t);
      }
      det = -det;
    }
    Scalar p = a.at(c, c);
    det = det * p;
    Scalar pinv = p.inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.entry_is_zero(i, c)) continue;
      Scalar factor = a.at(i, c) * pinv;
      for (std::size_t j = c; j < n; ++j)
        if (!a.entry_is_zero(c, j)) a.set(i, j, a.at(i, j) - factor * a.at(c, j));
    }
  }
  return det;
}

Mat column_space(const Mat& m) {
  RrefResult r = rref(m.transpose());
  return r.reduced.block(0, 0, r.rank, m.rows()).transpose();
}

std::vector<std::size_t> complement_coordinates(const Mat& m) {
  RrefResult r = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m.rows(); ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

bool in_column_span(const Mat& m, const Mat& v) {
  if (m.cols() == 0) return v.is_zero();
  return solve(m, v).has_value();
}

}  // namespace taumut
