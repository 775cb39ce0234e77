#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorb/core.hpp"
#include "nilorb/exactla.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/sl2rep.hpp"

namespace nilorb {

/// No isometry of the full group sends x to -x (a multiplicity space is not
/// isometric to its negative).
class NotConjugateInFullGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A conjugator exists over R but the one we know how to build would need an
/// irrational square root for this particular basis.
class NoRationalConjugator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AmbientKind { NoForm, Symmetric, Symplectic, Hermitian };

/// The standard representation together with its invariant form B.
struct AmbientSpace {
  AlgebraDescriptor alg;
  std::optional<Matrix> form;
  AmbientKind kind = AmbientKind::NoForm;

  std::size_t dim() const { return static_cast<std::size_t>(alg.ambient_dim()); }
};

/// Throws ValidationError for families without a matrix engine (SL_H, SP_HQ,
/// SO_STAR, COMPLEX_SEMISIMPLE).
void require_matrix_family(const AlgebraDescriptor& alg);

/// diag(1_p, -1_q) for SO_R and SU, [[0, I], [-I, 0]] for SP_R, no form for SL_R.
AmbientSpace standard_ambient(const AlgebraDescriptor& alg);

/// Checks that `form` has the right kind, is nondegenerate, and (SO_R, SU)
/// has signature (p, q). Throws ValidationError otherwise.
AmbientSpace make_ambient(const AlgebraDescriptor& alg, const Matrix& form);

/// B(z v, w) + B(v, z w) = 0 for form families, plus trace zero for SL_R and
/// SU. Throws ValidationError on a size mismatch.
bool algebra_membership(const Matrix& z, const AmbientSpace& ambient);

/// A basis of the algebra as a real vector space.
std::vector<Matrix> algebra_basis(const AmbientSpace& ambient);

/// The involution z -> -B^{-1} z^T B (z^* for SU) whose fixed points are the
/// algebra; the identity-free variant for SL_R returns z unchanged.
Matrix algebra_involution(const Matrix& z, const AmbientSpace& ambient);

struct StandardTriple {
  Matrix x;
  Matrix y;
  Matrix h;
  AmbientSpace ambient;
};

/// Throws InvariantError when [h,x] = 2x, [h,y] = -2y, [x,y] = h or algebra
/// membership fails.
void check_triple(const StandardTriple& t);

/// Jordan-basis triple in gl(n), h projected onto the algebra, then y solved
/// exactly from [x,y] = h, [h,y] = -2y inside the algebra. A seed randomises
/// the Jordan basis and the particular solution for y.
/// Throws ValidationError for x = 0, x not nilpotent or x outside the algebra.
StandardTriple complete_standard_triple(const Matrix& x, const AmbientSpace& ambient,
                                        std::optional<std::uint64_t> seed = std::nullopt);

/// One isotypic component V_r (x) W_r of a triple.
struct IsotypicBlock {
  int r = 0;
  /// Basis of W_r = ker x  (intersect)  (weight r space of h).
  std::vector<Vector> highest;
  /// Gram matrix of phi_r on `highest` (absent for SL_R).
  std::optional<Matrix> phi;
};

std::vector<IsotypicBlock> isotypic_decomposition(const StandardTriple& t);

MultiplicityDatum extract_datum(const StandardTriple& t);

/// Block-diagonal model on (+)_r V_r (x) W_r with form (+)_r B_r (x) phi_r.
/// Throws ValidationError for an invalid datum, the zero orbit, or a family
/// without a matrix engine.
StandardTriple build_model(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// A with A x A^{-1} = -x preserving the ambient form.
/// Throws NotConjugateInFullGroup or NoRationalConjugator.
Matrix build_negation_conjugator(const StandardTriple& t);

struct MatrixVerdict {
  NegationVerdict verdict;
  MultiplicityDatum datum;
  /// Datum of (-x, -y, h), computed independently.
  MultiplicityDatum negated_datum;
  std::optional<Matrix> conjugator;
  /// sign of det(A) (SL_R, SO_R)
  std::optional<int> conjugator_det_sign;
  std::optional<SigmaTau> conjugator_component;  // SO_R
  /// Components met by the centraliser, from explicit reflections (SO_R).
  std::optional<ComponentSet> centralizer;
  /// Some centraliser element has negative determinant (SL_R).
  std::optional<bool> centralizer_has_negative_det;
};

/// Matrix-level decision of O = -O, independent of the combinatorial
/// criteria in orbits.
MatrixVerdict decide_negation_matrix(const StandardTriple& t);

/// A random element of the ambient group's identity component (Cayley
/// transform of a small random algebra element; for SL_R a random integer
/// matrix of positive determinant).
Matrix random_isometry(const AmbientSpace& ambient, std::mt19937_64& rng);

/// g x g^{-1} together with the completed triple, for conjugation tests.
StandardTriple conjugate_triple(const StandardTriple& t, const Matrix& g);

}  // namespace nilorb
