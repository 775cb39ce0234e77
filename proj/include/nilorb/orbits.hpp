#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nilorb/core.hpp"
#include "nilorb/sl2rep.hpp"

namespace nilorb {

/// Values of (sigma, tau) met by a centraliser in O(p,q).
class ComponentSet {
 public:
  ComponentSet() : values_{{1, 1}} {}
  /// sigma_free / tau_free: whether -1 is reached in that coordinate.
  static ComponentSet product(bool sigma_free, bool tau_free);
  /// Subgroup generated by the given labels.
  static ComponentSet generated_by(const std::vector<SigmaTau>& gens);

  bool contains(SigmaTau st) const { return values_.count(st) != 0; }
  const std::set<SigmaTau>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::string to_string() const;

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;

 private:
  std::set<SigmaTau> values_;
};

/// All canonical data for `alg`, sorted. Throws ValidationError for
/// COMPLEX_SEMISIMPLE.
std::vector<MultiplicityDatum> enumerate_orbit_data(const AlgebraDescriptor& alg);

/// Number of integer partitions of n (independent count for tests/reports).
long partition_count(int n);

/// Datum of the orbit of -x: flips odd-r signatures for SP_R, SU and SO_STAR,
/// identity for every other family.
MultiplicityDatum negate_datum(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// Decides O = -O from the datum alone. Throws ValidationError on an invalid
/// datum.
NegationVerdict negation_stable(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

GibbsVerdict gibbs_verdict(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// (sigma, tau)-image of the O(p,q)-centraliser of a nilpotent with datum d,
/// from the image rules: sigma reaches -1 iff some r = 2m carries p_r >= 1 with
/// m even or q_r >= 1 with m odd; tau symmetrically.
ComponentSet centralizer_components(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// The same set read off from the four case labels (no even weights; the
/// q_{4k} = p_{4k+2} = 0 case; the p_{4k} = q_{4k+2} = 0 case; otherwise).
ComponentSet centralizer_components_by_case(const AlgebraDescriptor& alg,
                                            const MultiplicityDatum& d);

// ---------------------------------------------------------------------------
// Machine-readable negation-stability conditions, one per family.

enum class EntryField { N, P, Q };

struct Condition;

struct Always {};
/// exists r = residue (mod modulus) with field_r != 0
struct ExistsEntry {
  int residue;
  int modulus;
  EntryField field;
};
/// for all r = residue (mod modulus): p_r = q_r
struct AllSplit {
  int residue;
  int modulus;
};
/// sum over terms of n_r / divisor (r = residue mod modulus) is even
struct ParityTerm {
  int residue;
  int modulus;
  int divisor;
};
struct ParityEven {
  std::vector<ParityTerm> terms;
};
struct AnyOf {
  std::vector<Condition> args;
};
struct AllOf {
  std::vector<Condition> args;
};

struct Condition {
  std::variant<Always, ExistsEntry, AllSplit, ParityEven, AnyOf, AllOf> node;
};

bool evaluate(const Condition& c, const MultiplicityDatum& d);
std::string render(const Condition& c);

struct TableRow {
  Family family;
  std::string label;
  Condition stable_when;
};

/// One row per family: the condition for O = -O.
std::vector<TableRow> negation_table();
const TableRow& table_row(Family f);

}  // namespace nilorb
