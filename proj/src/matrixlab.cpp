#include "nilorb/matrixlab.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

namespace {

bool is_su(const AmbientSpace& a) { return a.alg.family() == Family::SU; }
bool has_form(const AmbientSpace& a) { return a.form.has_value(); }

/// z^T for real families, z^* for SU.
Matrix form_adjoint(const Matrix& z, const AmbientSpace& a) {
  return is_su(a) ? z.adjoint() : z.transpose();
}

/// B(a, b) = a^T B b (a^* B b for SU).
Scalar pair(const Vector& a, const Vector& b, const AmbientSpace& amb) {
  Vector bb = *amb.form * b;
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || bb[k].is_zero()) continue;
    s += (is_su(amb) ? a[k].conj() : a[k]) * bb[k];
  }
  return s;
}

bool needs_trace_zero(const AmbientSpace& a) {
  return a.alg.family() == Family::SL_R || a.alg.family() == Family::SU;
}

/// Real coordinates of the ambient matrix space: unit matrices, plus i times
/// unit matrices for SU.
std::vector<Matrix> real_unit_basis(const AmbientSpace& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = 1;
      basis.push_back(e);
      if (is_su(a)) {
        e(i, j) = Scalar::i();
        basis.push_back(e);
      }
    }
  return basis;
}

/// Linear membership defect: entries of z^T B + B z (when there is a form)
/// followed by the trace (when trace zero is required).
std::vector<Scalar> membership_defect(const Matrix& z, const AmbientSpace& a) {
  std::vector<Scalar> out;
  if (has_form(a)) {
    Matrix d = form_adjoint(z, a) * *a.form + *a.form * z;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) out.push_back(d(i, j));
  }
  if (needs_trace_zero(a)) out.push_back(z.trace());
  return out;
}

void append_entries(std::vector<Scalar>& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
}

/// Real system from complex equations: column k holds the equation values for
/// real unknown k. Rows are split into real and imaginary parts; rows that
/// vanish identically are dropped.
Matrix stack_real(const std::vector<std::vector<Scalar>>& columns) {
  if (columns.empty()) return Matrix();
  const std::size_t eqs = columns.front().size();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t e = 0; e < eqs; ++e) {
    for (int part = 0; part < 2; ++part) {
      std::vector<Scalar> row;
      bool nonzero = false;
      for (const auto& col : columns) {
        Scalar v = part == 0 ? Scalar(col[e].re()) : Scalar(col[e].im());
        nonzero |= !v.is_zero();
        row.push_back(std::move(v));
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  Matrix m(rows.size(), columns.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coeffs, std::size_t n) {
  Matrix z(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) z += basis[k] * coeffs[k];
  return z;
}

Vector combine_vectors(const std::vector<Vector>& vs, const std::vector<Scalar>& coeffs) {
  Vector out(vs.front().size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!coeffs[k].is_zero() && !vs[k][i].is_zero()) out[i] += coeffs[k] * vs[k][i];
  return out;
}

long random_small(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::size_t rank_of(const std::vector<Vector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_columns(vs, n));
}

/// Jordan chains of a nilpotent x: columns v, xv, ..., x^{L-1} v for each
/// chain, with v of lowest weight -(L-1).
struct JordanData {
  Matrix basis;
  std::vector<Scalar> weights;
};

JordanData jordan_basis(const Matrix& x, std::mt19937_64* rng) {
  const std::size_t n = x.rows();
  std::vector<Matrix> powers{Matrix::identity(n)};
  while (!powers.back().is_zero()) powers.push_back(powers.back() * x);
  const std::size_t index = powers.size() - 1;  // x^index = 0

  std::vector<std::vector<Vector>> kernels(index + 1);
  for (std::size_t j = 1; j <= index; ++j) kernels[j] = kernel_basis(powers[j]);

  struct Chain {
    Vector top;
    std::size_t length;
  };
  std::vector<Chain> chains;
  for (std::size_t j = index; j >= 1; --j) {
    std::vector<Vector> span = kernels[j - 1];
    for (const auto& c : chains) span.push_back(powers[c.length - j] * c.top);
    std::size_t current = rank_of(span, n);

    std::vector<Vector> candidates;
    if (rng) {
      for (std::size_t k = 0; k < kernels[j].size(); ++k) {
        std::vector<Scalar> coeffs;
        for (std::size_t t = 0; t < kernels[j].size(); ++t)
          coeffs.emplace_back(random_small(*rng, -3, 3));
        candidates.push_back(combine_vectors(kernels[j], coeffs));
      }
    }
    candidates.insert(candidates.end(), kernels[j].begin(), kernels[j].end());
    for (const auto& c : candidates) {
      span.push_back(c);
      std::size_t next = rank_of(span, n);
      if (next > current) {
        current = next;
        chains.push_back({c, j});
      } else {
        span.pop_back();
      }
    }
  }

  JordanData out;
  std::vector<Vector> cols;
  for (const auto& c : chains) {
    Vector v = c.top;
    const long r = static_cast<long>(c.length) - 1;
    for (long i = 0; i <= r; ++i) {
      cols.push_back(v);
      out.weights.emplace_back(-r + 2 * i);
      v = x * v;
    }
  }
  if (cols.size() != n) throw InvariantError("Jordan basis has the wrong size");
  out.basis = Matrix::from_columns(cols, n);
  return out;
}

std::vector<Vector> rebase(const std::vector<Vector>& w, const Matrix& coords) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < coords.cols(); ++j) out.push_back(combine_vectors(w, coords.column(j)));
  return out;
}

/// Coordinates C with C^T phi C = (+)[[0,1],[-1,0]] for a nondegenerate
/// antisymmetric rational phi.
Matrix symplectic_coordinates(const Matrix& phi) {
  const std::size_t k = phi.rows();
  auto form = [&](const Vector& a, const Vector& b) {
    Vector pb = phi * b;
    Scalar s;
    for (std::size_t i = 0; i < k; ++i)
      if (!a[i].is_zero()) s += a[i] * pb[i];
    return s;
  };
  std::vector<Vector> pool;
  for (std::size_t i = 0; i < k; ++i) pool.push_back(Matrix::identity(k).column(i));
  std::vector<Vector> out;
  while (!pool.empty()) {
    Vector f = pool.front();
    pool.erase(pool.begin());
    if (std::all_of(f.begin(), f.end(), [](const Scalar& e) { return e.is_zero(); })) continue;
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const Vector& v) { return !form(f, v).is_zero(); });
    if (it == pool.end()) throw InvariantError("degenerate symplectic multiplicity form");
    Vector g = *it;
    pool.erase(it);
    Scalar inv = form(f, g).inverse();
    for (auto& e : g) e *= inv;
    for (auto& v : pool) {
      Scalar a = form(g, v), b = form(f, v);
      for (std::size_t i = 0; i < k; ++i) v[i] += a * f[i] - b * g[i];
    }
    out.push_back(f);
    out.push_back(g);
  }
  return Matrix::from_columns(out, k);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// The Hermitian (or symmetric) matrix whose signature is recorded for block b.
Matrix recorded_form(const IsotypicBlock& b, const AmbientSpace& a) {
  if (is_su(a) && b.r % 2 != 0) return *b.phi * Scalar(Rational(0), Rational(-1));
  return *b.phi;
}

/// Basis of W_r adapted to the conjugator, and the matrix of T on it.
struct AdaptedBlock {
  int r = 0;
  std::vector<Vector> w;
  Matrix t;  // action on W_r in the basis w
  bool unimodular = false;
};

std::vector<AdaptedBlock> adapted_blocks(const StandardTriple& t, bool for_conjugator) {
  const Family f = t.ambient.alg.family();
  std::vector<AdaptedBlock> out;
  for (const auto& b : isotypic_decomposition(t)) {
    AdaptedBlock ab;
    ab.r = b.r;
    const std::size_t k = b.highest.size();
    ab.t = Matrix::identity(k);
    const bool odd = b.r % 2 != 0;
    if (f == Family::SL_R || (f == Family::SP_R && !odd) || (f == Family::SU && !odd && for_conjugator)) {
      ab.w = b.highest;
    } else if (f == Family::SO_R && odd) {
      Matrix c = symplectic_coordinates(*b.phi);
      ab.w = rebase(b.highest, c);
      for (std::size_t i = 1; i < k; i += 2) ab.t(i, i) = -1;
    } else {
      // diagonalise phi_r (or -i phi_r) by congruence
      Congruence c = diagonalize_congruence(recorded_form(b, t.ambient));
      ab.w = rebase(b.highest, c.basis);
      if (f == Family::SO_R) {
        ab.unimodular = true;
      } else if (odd && for_conjugator) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < k; ++i) (sgn(c.values[i]) > 0 ? pos : neg).push_back(i);
        if (pos.size() != neg.size()) {
          throw NotConjugateInFullGroup("multiplicity space at r=" + std::to_string(b.r) +
                                        " has signature (" + std::to_string(pos.size()) + "," +
                                        std::to_string(neg.size()) + "), not split");
        }
        ab.t = Matrix(k, k);
        std::vector<bool> used(k, false);
        for (auto i : pos) {
          bool matched = false;
          for (auto j : neg) {
            if (used[j]) continue;
            auto lambda = rational_sqrt(-c.values[i] / c.values[j]);
            if (!lambda) continue;
            // w_i -> lambda w_j, w_j -> w_i / lambda
            ab.t(j, i) = *lambda;
            ab.t(i, j) = Rational(Rational(1) / *lambda);
            used[j] = matched = true;
            break;
          }
          if (!matched) {
            throw NoRationalConjugator("no rational isometry phi -> -phi found at r=" +
                                       std::to_string(b.r));
          }
        }
      }
    }
    out.push_back(std::move(ab));
  }
  return out;
}

/// Columns y^i w_j in the order (block, j, i).
Matrix adapted_basis(const StandardTriple& t, const std::vector<AdaptedBlock>& blocks) {
  std::vector<Vector> cols;
  for (const auto& b : blocks)
    for (const auto& w : b.w) {
      Vector v = w;
      for (int i = 0; i <= b.r; ++i) {
        cols.push_back(v);
        v = t.y * v;
      }
    }
  if (cols.size() != t.x.rows()) throw InvariantError("isotypic blocks do not fill the space");
  return Matrix::from_columns(cols, t.x.rows());
}

Matrix conjugator_from_blocks(const StandardTriple& t, const std::vector<AdaptedBlock>& blocks) {
  std::vector<Matrix> parts;
  for (const auto& b : blocks)
    parts.push_back(kron(b.t, build_negation_intertwiner(b.r, b.unimodular)));
  Matrix p = adapted_basis(t, blocks);
  return p * direct_sum(parts) * inverse(p);
}

/// id_{V_r} (x) (reflection of the j-th adapted vector of block `which`).
Matrix centralizer_generator(const StandardTriple& t, const std::vector<AdaptedBlock>& blocks,
                             std::size_t which, std::size_t j) {
  std::vector<Scalar> diag;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t jj = 0; jj < blocks[bi].w.size(); ++jj)
      for (int i = 0; i <= blocks[bi].r; ++i) diag.emplace_back(bi == which && jj == j ? -1L : 1L);
  Matrix p = adapted_basis(t, blocks);
  return p * Matrix::diagonal(diag) * inverse(p);
}

int det_sign(const Matrix& m) {
  Scalar d = determinant(m);
  if (!d.is_rational() || sgn(d.re()) == 0) throw InvariantError("expected a real invertible matrix");
  return sgn(d.re());
}

}  // namespace

// ---------------------------------------------------------------------------

void require_matrix_family(const AlgebraDescriptor& alg) {
  switch (alg.family()) {
    case Family::SL_R:
    case Family::SO_R:
    case Family::SP_R:
    case Family::SU:
      return;
    default:
      throw ValidationError("no matrix engine for family " + std::string(family_name(alg.family())) +
                            " (handled combinatorially only)");
  }
}

AmbientSpace standard_ambient(const AlgebraDescriptor& alg) {
  require_matrix_family(alg);
  const std::size_t n = static_cast<std::size_t>(alg.ambient_dim());
  switch (alg.family()) {
    case Family::SL_R:
      return AmbientSpace{alg, std::nullopt, AmbientKind::NoForm};
    case Family::SP_R: {
      Matrix j(n, n);
      const std::size_t h = n / 2;
      for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
      }
      return AmbientSpace{alg, j, AmbientKind::Symplectic};
    }
    default: {
      std::vector<Scalar> d;
      for (int i = 0; i < alg.p(); ++i) d.emplace_back(1L);
      for (int i = 0; i < alg.q(); ++i) d.emplace_back(-1L);
      return AmbientSpace{alg, Matrix::diagonal(d),
                          alg.family() == Family::SU ? AmbientKind::Hermitian : AmbientKind::Symmetric};
    }
  }
}

AmbientSpace make_ambient(const AlgebraDescriptor& alg, const Matrix& form) {
  require_matrix_family(alg);
  const auto n = static_cast<std::size_t>(alg.ambient_dim());
  if (form.rows() != n || form.cols() != n) throw ValidationError("form has the wrong size");
  if (determinant(form).is_zero()) throw ValidationError("form is degenerate");
  switch (alg.family()) {
    case Family::SL_R:
      throw ValidationError("sl_r takes no form");
    case Family::SP_R:
      if (!form.is_rational() || !form.is_antisymmetric()) {
        throw ValidationError("sp_r form must be real antisymmetric");
      }
      return AmbientSpace{alg, form, AmbientKind::Symplectic};
    case Family::SO_R:
      if (signature_symmetric(form) != Inertia{alg.p(), alg.q(), 0}) {
        throw ValidationError("so_r form must be real symmetric of signature (p,q)");
      }
      return AmbientSpace{alg, form, AmbientKind::Symmetric};
    case Family::SU:
      if (!form.is_hermitian() || signature_hermitian(form) != Inertia{alg.p(), alg.q(), 0}) {
        throw ValidationError("su form must be Hermitian of signature (p,q)");
      }
      return AmbientSpace{alg, form, AmbientKind::Hermitian};
    default:
      break;
  }
  throw ValidationError("unsupported family");
}

bool algebra_membership(const Matrix& z, const AmbientSpace& ambient) {
  if (z.rows() != ambient.dim() || z.cols() != ambient.dim()) {
    throw ValidationError("matrix size does not match the ambient dimension");
  }
  if (!is_su(ambient) && !z.is_rational()) return false;
  auto defect = membership_defect(z, ambient);
  return std::all_of(defect.begin(), defect.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Matrix> algebra_basis(const AmbientSpace& ambient) {
  auto units = real_unit_basis(ambient);
  std::vector<std::vector<Scalar>> columns;
  for (const auto& e : units) columns.push_back(membership_defect(e, ambient));
  Matrix system = stack_real(columns);
  std::vector<Matrix> basis;
  if (system.rows() == 0) return units;
  for (const auto& v : kernel_basis(system)) basis.push_back(combine(units, v, ambient.dim()));
  return basis;
}

Matrix algebra_involution(const Matrix& z, const AmbientSpace& ambient) {
  if (!has_form(ambient)) return z;
  return -(inverse(*ambient.form) * form_adjoint(z, ambient) * *ambient.form);
}

void check_triple(const StandardTriple& t) {
  const auto& [x, y, h, amb] = t;
  if (!(commutator(h, x) == x * Scalar(2))) throw InvariantError("[h,x] != 2x");
  if (!(commutator(h, y) == y * Scalar(-2))) throw InvariantError("[h,y] != -2y");
  if (!(commutator(x, y) == h)) throw InvariantError("[x,y] != h");
  for (const Matrix* z : {&x, &y, &h})
    if (!algebra_membership(*z, amb)) throw InvariantError("triple element outside the algebra");
}

StandardTriple complete_standard_triple(const Matrix& x, const AmbientSpace& ambient,
                                        std::optional<std::uint64_t> seed) {
  const std::size_t n = ambient.dim();
  if (x.rows() != n || x.cols() != n) {
    throw ValidationError("matrix size does not match the ambient dimension");
  }
  if (x.is_zero()) throw ValidationError("x must be nonzero");
  if (!algebra_membership(x, ambient)) throw ValidationError("x is not in the algebra");
  if (!power(x, static_cast<unsigned>(n)).is_zero()) throw ValidationError("x is not nilpotent");

  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  JordanData jd = jordan_basis(x, rng ? &*rng : nullptr);
  Matrix h_gl = jd.basis * Matrix::diagonal(jd.weights) * inverse(jd.basis);
  Matrix h = has_form(ambient) ? (h_gl + algebra_involution(h_gl, ambient)) * Scalar(Rational(1, 2))
                               : h_gl;
  if (!(commutator(h, x) == x * Scalar(2))) throw InvariantError("projected h lost [h,x] = 2x");

  // y = sum c_k E_k with membership(y) = 0, [x,y] = h, [h,y] + 2y = 0
  auto units = real_unit_basis(ambient);
  std::vector<std::vector<Scalar>> columns;
  for (const auto& e : units) {
    auto col = membership_defect(e, ambient);
    append_entries(col, commutator(x, e));
    append_entries(col, commutator(h, e) + e * Scalar(2));
    columns.push_back(std::move(col));
  }
  std::vector<Scalar> rhs = membership_defect(Matrix(n, n), ambient);
  append_entries(rhs, h);
  append_entries(rhs, Matrix(n, n));
  columns.push_back(rhs);
  Matrix aug = stack_real(columns);
  Matrix a(aug.rows(), units.size());
  Vector b(aug.rows());
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    for (std::size_t j = 0; j < units.size(); ++j) a(i, j) = aug(i, j);
    b[i] = aug(i, units.size());
  }
  auto sol = solve_linear(a, b);
  if (!sol) throw InvariantError("no y completes the triple");
  if (rng) {
    for (const auto& k : kernel_basis(a)) {
      Scalar c(random_small(*rng, -2, 2));
      for (std::size_t i = 0; i < k.size(); ++i) (*sol)[i] += c * k[i];
    }
  }
  StandardTriple t{x, combine(units, *sol, n), h, ambient};
  check_triple(t);
  return t;
}

std::vector<IsotypicBlock> isotypic_decomposition(const StandardTriple& t) {
  check_triple(t);
  const std::size_t n = t.x.rows();
  std::vector<IsotypicBlock> blocks;
  std::size_t filled = 0;
  for (int r = 0; r < static_cast<int>(n); ++r) {
    Matrix stacked(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        stacked(i, j) = t.x(i, j);
        stacked(n + i, j) = t.h(i, j) - (i == j ? Scalar(r) : Scalar(0));
      }
    auto w = kernel_basis(stacked);
    if (w.empty()) continue;
    IsotypicBlock b{r, std::move(w), std::nullopt};
    if (has_form(t.ambient)) {
      Matrix yr = power(t.y, static_cast<unsigned>(r));
      const Scalar norm = highest_lowest_pairing(r).inverse();
      const std::size_t k = b.highest.size();
      Matrix phi(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          phi(i, j) = pair(b.highest[i], yr * b.highest[j], t.ambient) * norm;
      b.phi = std::move(phi);
    }
    filled += static_cast<std::size_t>(r + 1) * b.highest.size();
    blocks.push_back(std::move(b));
  }
  if (filled != n) throw InvariantError("isotypic components do not add up to the ambient dimension");
  return blocks;
}

MultiplicityDatum extract_datum(const StandardTriple& t) {
  const Family f = t.ambient.alg.family();
  std::vector<std::pair<int, MultiplicityEntry>> entries;
  for (const auto& b : isotypic_decomposition(t)) {
    const int k = static_cast<int>(b.highest.size());
    const std::string at = " at r=" + std::to_string(b.r);
    if (required_kind(f, b.r) == EntryKind::Dim) {
      if (b.phi && !b.phi->is_antisymmetric()) {
        throw InvariantError("multiplicity form should be antisymmetric" + at);
      }
      entries.emplace_back(b.r, Dim{k});
      continue;
    }
    Matrix form = recorded_form(b, t.ambient);
    Inertia in = is_su(t.ambient) ? signature_hermitian(form) : signature_symmetric(form);
    if (in.zero != 0) throw InvariantError("degenerate multiplicity form" + at);
    entries.emplace_back(b.r, Sig{in.positive, in.negative});
  }
  auto d = MultiplicityDatum::from_entries(std::move(entries));
  if (auto v = validate_datum(t.ambient.alg, d); !v) {
    throw InvariantError("extracted datum is invalid: " + v.message);
  }
  return d;
}

StandardTriple build_model(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  require_matrix_family(alg);
  if (auto v = validate_datum(alg, d); !v) throw ValidationError("invalid datum: " + v.message);
  if (d.is_zero_orbit()) throw ValidationError("x must be nonzero (zero orbit has no standard triple)");

  const Family f = alg.family();
  std::vector<Matrix> xs, ys, hs, forms;
  for (const auto& [r, e] : d.entries()) {
    const auto model = build_irreducible(r);
    const auto k = static_cast<std::size_t>(entry_size(e));
    const Matrix id = Matrix::identity(k);
    xs.push_back(kron(id, model.x));
    ys.push_back(kron(id, model.y));
    hs.push_back(kron(id, model.h));
    if (f == Family::SL_R) continue;
    Matrix phi(k, k);
    if (const auto* s = std::get_if<Sig>(&e)) {
      const Scalar unit = (f == Family::SU && r % 2 != 0) ? Scalar::i() : Scalar(1);
      for (std::size_t i = 0; i < k; ++i)
        phi(i, i) = static_cast<int>(i) < s->p ? unit : -unit;
    } else {
      for (std::size_t i = 0; i + 1 < k; i += 2) {
        phi(i, i + 1) = 1;
        phi(i + 1, i) = -1;
      }
    }
    forms.push_back(kron(phi, build_invariant_form(r).b));
  }
  AmbientSpace amb{alg, std::nullopt, AmbientKind::NoForm};
  if (f != Family::SL_R) {
    amb.form = direct_sum(forms);
    amb.kind = f == Family::SO_R   ? AmbientKind::Symmetric
               : f == Family::SP_R ? AmbientKind::Symplectic
                                   : AmbientKind::Hermitian;
  }
  StandardTriple t{direct_sum(xs), direct_sum(ys), direct_sum(hs), amb};
  check_triple(t);
  return t;
}

Matrix build_negation_conjugator(const StandardTriple& t) {
  auto blocks = adapted_blocks(t, /*for_conjugator=*/true);
  Matrix a = conjugator_from_blocks(t, blocks);
  if (!(a * t.x * inverse(a) == -t.x)) throw InvariantError("conjugator does not negate x");
  if (has_form(t.ambient) && !(form_adjoint(a, t.ambient) * *t.ambient.form * a == *t.ambient.form)) {
    throw InvariantError("conjugator does not preserve the form");
  }
  return a;
}

MatrixVerdict decide_negation_matrix(const StandardTriple& t) {
  const Family f = t.ambient.alg.family();
  MatrixVerdict out;
  out.datum = extract_datum(t);
  StandardTriple neg{-t.x, -t.y, t.h, t.ambient};
  out.negated_datum = extract_datum(neg);

  if (f == Family::SP_R || f == Family::SU) {
    if (out.datum != out.negated_datum) {
      out.verdict = {false, NegationReason::OddSignatureNotSplit,
                     "datum of -x is " + out.negated_datum.to_string() + ", datum of x is " +
                         out.datum.to_string()};
      return out;
    }
    out.verdict = {true, NegationReason::OddSignaturesSplit,
                   "x and -x have isometric multiplicity spaces"};
    try {
      out.conjugator = build_negation_conjugator(t);
    } catch (const NoRationalConjugator& e) {
      out.verdict.detail += std::string("; ") + e.what();
    }
    return out;
  }

  // SL_R and SO_R: the full group always conjugates x to -x; decide the component.
  if (out.datum != out.negated_datum) {
    throw InvariantError("x and -x must share their datum for " + std::string(family_name(f)));
  }
  out.conjugator = build_negation_conjugator(t);
  out.conjugator_det_sign = det_sign(*out.conjugator);
  auto blocks = adapted_blocks(t, /*for_conjugator=*/false);

  if (f == Family::SL_R) {
    bool negative = false;
    for (std::size_t bi = 0; bi < blocks.size() && !negative; ++bi)
      negative = det_sign(centralizer_generator(t, blocks, bi, 0)) < 0;
    out.centralizer_has_negative_det = negative;
    const bool stable = *out.conjugator_det_sign > 0 || negative;
    std::ostringstream os;
    os << "conjugator det sign " << *out.conjugator_det_sign << "; centraliser "
       << (negative ? "meets" : "misses") << " det < 0";
    out.verdict = {stable, NegationReason::JordanBlockCriterion, os.str()};
    return out;
  }

  if (f != Family::SO_R) throw InvariantError("unexpected family");
  const Matrix& form = *t.ambient.form;
  out.conjugator_component = sigma_tau(*out.conjugator, form);
  if (out.conjugator_component->sigma * out.conjugator_component->tau != *out.conjugator_det_sign) {
    throw InvariantError("det != sigma * tau");
  }
  std::vector<SigmaTau> gens;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].r % 2 != 0) continue;  // symplectic factors are connected
    for (std::size_t j = 0; j < blocks[bi].w.size(); ++j)
      gens.push_back(sigma_tau(centralizer_generator(t, blocks, bi, j), form));
  }
  out.centralizer = ComponentSet::generated_by(gens);
  const bool stable = out.centralizer->contains(*out.conjugator_component);
  std::ostringstream os;
  os << "conjugator component (" << out.conjugator_component->sigma << ","
     << out.conjugator_component->tau << "); centraliser components " << out.centralizer->to_string();
  out.verdict = {stable, NegationReason::SOpqComponentCriterion, os.str()};
  return out;
}

Matrix random_isometry(const AmbientSpace& ambient, std::mt19937_64& rng) {
  const std::size_t n = ambient.dim();
  if (!has_form(ambient)) {
    for (;;) {
      Matrix g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = random_small(rng, -2, 2);
      Scalar d = determinant(g);
      if (d.is_zero()) continue;
      if (sgn(d.re()) < 0)
        for (std::size_t j = 0; j < n; ++j) g(0, j) = -g(0, j);
      return g;
    }
  }
  const auto basis = algebra_basis(ambient);
  const Matrix id = Matrix::identity(n);
  for (;;) {
    Matrix z(n, n);
    for (const auto& e : basis) z += e * Scalar(Rational(random_small(rng, -2, 2), 2));
    Matrix m = id - z;
    if (determinant(m).is_zero()) continue;
    Matrix g = (id + z) * inverse(m);
    if (!(form_adjoint(g, ambient) * *ambient.form * g == *ambient.form)) {
      throw InvariantError("Cayley transform is not an isometry");
    }
    return g;
  }
}

StandardTriple conjugate_triple(const StandardTriple& t, const Matrix& g) {
  Matrix gi = inverse(g);
  StandardTriple out{g * t.x * gi, g * t.y * gi, g * t.h * gi, t.ambient};
  check_triple(out);
  return out;
}

}  // namespace nilorb
