#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

using Rational = mpq_class;

/// Exact scalar over the Gaussian rationals Q(i).
///
/// A scalar with zero imaginary part is the corresponding rational: there is
/// no separate "kind" to keep in sync, so equality between a rational and a
/// Gaussian rational with vanishing imaginary part holds by construction.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_rational() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  Scalar conj() const { return is_rational() ? *this : Scalar(re_, -im_); }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text encoding: "a/b" for rationals, "a/b+c/d*i" otherwise.
  std::string to_string() const;
  /// Accepts "3", "-1/2", "i", "-i", "2*i", "1/2-3/4*i", "1+i".
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& d);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix adjoint() const;  // conjugate transpose
  Matrix conj() const;
  Scalar trace() const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_hermitian() const;
  bool is_skew_hermitian() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);
Matrix power(const Matrix& m, unsigned k);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Basis of the right null space {v : m v = 0}.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Result of congruence diagonalisation: basis.adjoint() * s * basis == diag(values).
struct Congruence {
  Matrix basis;
  std::vector<Rational> values;
};

/// Symmetric (real entries) or Hermitian congruence diagonalisation by exact
/// Gaussian steps. A zero diagonal pivot is repaired with v_i += conj(s_ij) v_j,
/// which makes the new diagonal entry 2|s_ij|^2.
Congruence diagonalize_congruence(const Matrix& s);

/// Throws std::invalid_argument for non-symmetric or non-rational input.
Inertia signature_symmetric(const Matrix& s);
/// Throws std::invalid_argument for non-Hermitian input.
Inertia signature_hermitian(const Matrix& s);

}  // namespace nilorb
