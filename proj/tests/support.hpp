#pragma once

#include <random>

#include "nilorb/exactla.hpp"

namespace nilorb::testing {

inline Matrix diag_form(int p, int q) {
  std::vector<Scalar> d;
  for (int i = 0; i < p; ++i) d.emplace_back(1L);
  for (int i = 0; i < q; ++i) d.emplace_back(-1L);
  return Matrix::diagonal(d);
}

/// s_v(w) = w - 2 B(v,w)/B(v,v) v for a non-isotropic v.
inline Matrix reflection(const Matrix& form, const Vector& v) {
  const std::size_t n = form.rows();
  Vector bv = form * v;
  Scalar vv;
  for (std::size_t i = 0; i < n; ++i) vv += v[i] * bv[i];
  Matrix s = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= Scalar(2) * v[i] * bv[j] / vv;
  return s;
}

/// Cayley transform of a random so(form) element times up to three random
/// reflections, so every component of O(form) is reached.
inline Matrix random_orthogonal(const Matrix& form, std::mt19937_64& rng) {
  const std::size_t n = form.rows();
  std::uniform_int_distribution<long> d(-2, 2);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(Rational(d(rng), 2));
  const Matrix z = (a - inverse(form) * a.transpose() * form) * Scalar(Rational(1, 2));
  const Matrix id = Matrix::identity(n);
  Matrix g = id;
  if (!determinant(id - z).is_zero()) g = (id + z) * inverse(id - z);
  const int reflections = static_cast<int>(rng() % 4);
  for (int k = 0; k < reflections; ++k) {
    Vector v(n);
    for (auto& e : v) e = Scalar(d(rng));
    Vector bv = form * v;
    Scalar vv;
    for (std::size_t i = 0; i < n; ++i) vv += v[i] * bv[i];
    if (vv.is_zero()) continue;
    g = g * reflection(form, v);
  }
  return g;
}

}  // namespace nilorb::testing
