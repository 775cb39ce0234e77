#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace nilorb {

/// Raised for malformed user input (datum, descriptor, matrix file).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact identity that must hold fails.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family {
  SL_R,                // sl(n, R)
  SO_R,                // so(p, q)
  SP_R,                // sp(2n, R), parameter is the half rank n
  SU,                  // su(p, q)
  SL_H,                // sl(n, H)
  SP_HQ,               // sp(p, q)
  SO_STAR,             // so*(2n), parameter n = quaternionic dimension
  COMPLEX_SEMISIMPLE,  // family-level verdict only
};

std::string_view family_name(Family f);  // "sl_r", "so_r", ...
Family parse_family(std::string_view name);

/// Which classical real Lie algebra, with its integer parameters.
class AlgebraDescriptor {
 public:
  static AlgebraDescriptor sl_r(int n) { return make(Family::SL_R, n, 0, 0); }
  static AlgebraDescriptor so_r(int p, int q) { return make(Family::SO_R, 0, p, q); }
  static AlgebraDescriptor sp_r(int n) { return make(Family::SP_R, n, 0, 0); }
  static AlgebraDescriptor su(int p, int q) { return make(Family::SU, 0, p, q); }
  static AlgebraDescriptor sl_h(int n) { return make(Family::SL_H, n, 0, 0); }
  static AlgebraDescriptor sp_hq(int p, int q) { return make(Family::SP_HQ, 0, p, q); }
  static AlgebraDescriptor so_star(int n) { return make(Family::SO_STAR, n, 0, 0); }
  static AlgebraDescriptor complex_semisimple(int n) {
    return make(Family::COMPLEX_SEMISIMPLE, n, 0, 0);
  }
  /// Throws ValidationError when the parameters are out of range.
  static AlgebraDescriptor make(Family f, int n, int p, int q);

  Family family() const { return family_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }

  /// True for families parametrised by a signature (p, q).
  bool has_signature_params() const;
  /// Dimension of the standard representation over its division algebra.
  int ambient_dim() const;

  /// "n=3" or "p=2;q=1".
  std::string params_text() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;

 private:
  AlgebraDescriptor(Family f, int n, int p, int q) : family_(f), n_(n), p_(p), q_(q) {}
  Family family_;
  int n_;
  int p_;
  int q_;
};

struct Dim {
  int n = 0;
  friend auto operator<=>(const Dim&, const Dim&) = default;
};

struct Sig {
  int p = 0;
  int q = 0;
  int total() const { return p + q; }
  friend auto operator<=>(const Sig&, const Sig&) = default;
};

/// Size of the multiplicity space W_r: a dimension, or the signature of phi_r.
using MultiplicityEntry = std::variant<Dim, Sig>;

int entry_size(const MultiplicityEntry& e);
bool entry_is_zero(const MultiplicityEntry& e);
std::string entry_text(const MultiplicityEntry& e);  // "Dim(2)" / "Sig(1;0)"

enum class EntryKind { Dim, Sig };
/// The entry kind forced by the family and the parity of r.
EntryKind required_kind(Family f, int r);

/// Complete orbit invariant: r -> size of (W_r, phi_r). Kept in canonical
/// form (sorted by r, zero entries stripped).
class MultiplicityDatum {
 public:
  MultiplicityDatum() = default;
  /// Canonicalises: drops zero entries; throws ValidationError on a repeated
  /// or negative r, or on negative counts.
  static MultiplicityDatum from_entries(std::vector<std::pair<int, MultiplicityEntry>> entries);

  const std::map<int, MultiplicityEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::optional<MultiplicityEntry> at(int r) const;

  /// Total size n_r (p_r + q_r for signatures), 0 when absent.
  int size_at(int r) const;
  /// p_r / q_r for a Sig entry, 0 otherwise.
  int p_at(int r) const;
  int q_at(int r) const;

  /// Is this the datum of the zero orbit (single r = 0 entry)?
  bool is_zero_orbit() const;

  std::string to_string() const;  // "r=2:Sig(1;0) r=3:Dim(2)"

  friend bool operator==(const MultiplicityDatum&, const MultiplicityDatum&) = default;
  friend bool operator<(const MultiplicityDatum& a, const MultiplicityDatum& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::map<int, MultiplicityEntry> entries_;
};

/// The datum of the zero orbit for this algebra.
MultiplicityDatum zero_orbit_datum(const AlgebraDescriptor& alg);

struct ValidationResult {
  bool ok = true;
  std::string message;
  std::optional<int> offending_r;
  explicit operator bool() const { return ok; }
};

/// Checks entry kinds, parity constraints and the ambient dimension/signature
/// balance. Reports the first violated invariant.
ValidationResult validate_datum(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

enum class NegationReason {
  AlwaysStableFamily,
  OddSignaturesSplit,
  OddSignatureNotSplit,
  JordanBlockCriterion,
  SOpqComponentCriterion,
  ZeroOrbit,
};

std::string_view reason_name(NegationReason r);

struct NegationVerdict {
  bool stable = false;
  NegationReason reason = NegationReason::ZeroOrbit;
  std::string detail;
};

enum class GibbsVerdict { NoGibbsStates, NotDeterminedByThisCriterion };

std::string_view gibbs_name(GibbsVerdict g);

}  // namespace nilorb
