#include "nilorb/sl2rep.hpp"

#include <stdexcept>

namespace nilorb {

namespace {

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

Matrix principal_submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

int sign_of_det(const Matrix& m) {
  if (m.rows() == 0) return 1;
  Scalar d = determinant(m);
  if (!d.is_rational() || sgn(d.re()) == 0) {
    throw std::logic_error("compression of an isometry must be invertible");
  }
  return sgn(d.re());
}

}  // namespace

IrreducibleModel build_irreducible(int r) {
  if (r < 0) throw std::invalid_argument("highest weight must be >= 0");
  const auto n = static_cast<std::size_t>(r + 1);
  IrreducibleModel m{r, Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (int i = 0; i <= r; ++i) {
    m.h(i, i) = r - 2 * i;
    if (i < r) m.y(i + 1, i) = 1;
    if (i > 0) m.x(i - 1, i) = static_cast<long>(i) * (r - i + 1);
  }
  return m;
}

InvariantFormModel build_invariant_form(int r) {
  if (r < 0) throw std::invalid_argument("highest weight must be >= 0");
  const int m = r / 2;
  const int b0 = r % 2 == 0 ? sign_pow(m) : sign_pow(m + 1);
  const auto n = static_cast<std::size_t>(r + 1);
  InvariantFormModel f{r, Matrix(n, n)};
  for (int i = 0; i <= r; ++i) f.b(i, r - i) = sign_pow(i) * b0;
  return f;
}

Scalar highest_lowest_pairing(int r) {
  return build_invariant_form(r).b(0, static_cast<std::size_t>(r));
}

Matrix build_negation_intertwiner(int r, bool unimodular) {
  if (r < 0) throw std::invalid_argument("highest weight must be >= 0");
  if (unimodular && r % 2 != 0) {
    throw std::invalid_argument("the unimodular intertwiner exists only for even r");
  }
  const int scale = unimodular ? sign_pow(r / 2) : 1;
  std::vector<Scalar> d;
  for (int i = 0; i <= r; ++i) d.emplace_back(static_cast<long>(scale * sign_pow(i)));
  return Matrix::diagonal(d);
}

bool has_kind(const Matrix& m, FormKind kind) {
  switch (kind) {
    case FormKind::Symmetric: return m.is_symmetric();
    case FormKind::Skew: return m.is_antisymmetric();
    case FormKind::Hermitian: return m.is_hermitian();
    case FormKind::SkewHermitian: return m.is_skew_hermitian();
  }
  return false;
}

Form tensor_form(const Form& b1, const Form& b2) {
  if (b1.matrix.is_zero() || b2.matrix.is_zero()) {
    throw std::invalid_argument("tensor_form needs nonzero forms");
  }
  if (b1.kind != FormKind::Symmetric && b1.kind != FormKind::Skew) {
    throw std::invalid_argument("first factor must be a real bilinear form");
  }
  const bool flip = b1.kind == FormKind::Skew;
  FormKind kind{};
  switch (b2.kind) {
    case FormKind::Symmetric: kind = flip ? FormKind::Skew : FormKind::Symmetric; break;
    case FormKind::Skew: kind = flip ? FormKind::Symmetric : FormKind::Skew; break;
    case FormKind::Hermitian: kind = flip ? FormKind::SkewHermitian : FormKind::Hermitian; break;
    case FormKind::SkewHermitian:
      kind = flip ? FormKind::Hermitian : FormKind::SkewHermitian;
      break;
  }
  return Form{kron(b1.matrix, b2.matrix), kind};
}

SigmaTau operator*(SigmaTau a, SigmaTau b) { return {a.sigma * b.sigma, a.tau * b.tau}; }

SigmaTau sigma_tau(const Matrix& g, const Matrix& form) {
  if (!form.is_rational() || !form.is_symmetric()) {
    throw std::invalid_argument("sigma_tau needs a rational symmetric form");
  }
  if (!g.is_rational() || g.rows() != form.rows() || !g.is_square()) {
    throw std::invalid_argument("sigma_tau needs a real square matrix of the form's size");
  }
  if (!(g.transpose() * form * g == form)) {
    throw std::invalid_argument("matrix is not an isometry of the form");
  }
  Congruence c = diagonalize_congruence(form);
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    int s = sgn(c.values[i]);
    if (s == 0) throw std::invalid_argument("sigma_tau needs a nondegenerate form");
    (s > 0 ? pos : neg).push_back(i);
  }
  Matrix adapted = inverse(c.basis) * g * c.basis;
  return {sign_of_det(principal_submatrix(adapted, pos)),
          sign_of_det(principal_submatrix(adapted, neg))};
}

SigmaTau sigma_tau_direct_sum(const std::vector<SigmaTau>& parts) {
  if (parts.empty()) throw std::invalid_argument("sigma_tau_direct_sum of an empty list");
  SigmaTau out;
  for (const auto& p : parts) out = out * p;
  return out;
}

SigmaTau sigma_tau_tensor_negation(int r, int r_prime) {
  if (r < 0) throw std::invalid_argument("highest weight must be >= 0");
  if (r_prime < 0) {
    if (r % 2 != 0) throw std::invalid_argument("single-weight form needs even r");
    const int m = r / 2;
    const int s = m % 2 == 0 ? sign_pow(m / 2) : sign_pow((m + 1) / 2);
    return {s, s};
  }
  if (r % 2 == 0 || r_prime % 2 == 0) {
    throw std::invalid_argument("tensor form needs two odd weights");
  }
  const int s = sign_pow(static_cast<long>(r + 1) * (r_prime + 1) / 4);
  return {s, s};
}

}  // namespace nilorb
