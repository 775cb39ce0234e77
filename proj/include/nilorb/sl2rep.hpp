#pragma once

#include <utility>
#include <vector>

#include "nilorb/exactla.hpp"

namespace nilorb {

/// The irreducible sl(2,R)-module V_r of dimension r + 1.
///
/// Basis e_0..e_r with H e_i = (r - 2i) e_i, Y e_i = e_{i+1} and
/// X e_i = i (r - i + 1) e_{i-1}; e_0 is the highest weight vector. The
/// lowering operator is unnormalised so that every entry stays integral.
struct IrreducibleModel {
  int r = 0;
  Matrix x;
  Matrix y;
  Matrix h;
};

IrreducibleModel build_irreducible(int r);

/// The fixed invariant form B_r on V_r: antidiagonal,
/// B(e_i, e_{r-i}) = (-1)^i b0 with b0 = (-1)^m for r = 2m and
/// b0 = (-1)^(m+1) for r = 2m + 1. For even r the zero weight line is
/// positive, so the signature is (m+1, m); for odd r, B(v, Xv) >= 0 on the
/// weight -1 line.
struct InvariantFormModel {
  int r = 0;
  Matrix b;
};

InvariantFormModel build_invariant_form(int r);

/// B_r(e_0, e_r), the normalising constant used when reading off phi_r.
Scalar highest_lowest_pairing(int r);

/// u_r = diag((-1)^i). With `unimodular` (even r only) returns
/// (-1)^(r/2) u_r, which has determinant one. Throws std::invalid_argument
/// for unimodular with odd r.
Matrix build_negation_intertwiner(int r, bool unimodular = false);

enum class FormKind { Symmetric, Skew, Hermitian, SkewHermitian };

struct Form {
  Matrix matrix;
  FormKind kind;
};

/// Kronecker product of a real bilinear form with a bilinear or sesquilinear
/// form; the resulting symmetry kind follows the product rules for
/// symmetric/skew (bilinear) and Hermitian/skew-Hermitian (sesquilinear).
/// Throws std::invalid_argument on zero input or a sesquilinear first factor.
Form tensor_form(const Form& b1, const Form& b2);

/// Whether m actually has the symmetry described by kind.
bool has_kind(const Matrix& m, FormKind kind);

/// Component labels (sigma, tau) in {+1,-1}^2 of an orthogonal transformation.
struct SigmaTau {
  int sigma = 1;
  int tau = 1;
  friend bool operator==(const SigmaTau&, const SigmaTau&) = default;
  friend auto operator<=>(const SigmaTau&, const SigmaTau&) = default;
};

SigmaTau operator*(SigmaTau a, SigmaTau b);

/// sigma (tau) is the sign of the determinant of the compression of g to a
/// maximal positive (negative) subspace, split off by exact congruence
/// diagonalisation of `form`. Throws std::invalid_argument when `form` is not
/// a nondegenerate rational symmetric matrix or g is not an isometry.
SigmaTau sigma_tau(const Matrix& g, const Matrix& form);

/// Componentwise product; throws std::invalid_argument for an empty list.
SigmaTau sigma_tau_direct_sum(const std::vector<SigmaTau>& parts);

/// Closed forms for the component of the negation intertwiners:
///  - r even (r_prime < 0): the unimodular u~_r on (V_r, B_r);
///  - r, r_prime odd: u_r (x) u_{r'} on (V_r (x) V_{r'}, B_r (x) B_{r'}).
/// Throws std::invalid_argument on a parity mismatch.
SigmaTau sigma_tau_tensor_negation(int r, int r_prime = -1);

}  // namespace nilorb
