#include "nilorb/orbits.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nilorb {

// ---------------------------------------------------------------------------
// ComponentSet

ComponentSet ComponentSet::product(bool sigma_free, bool tau_free) {
  ComponentSet s;
  if (sigma_free) s.values_.insert({-1, 1});
  if (tau_free) s.values_.insert({1, -1});
  if (sigma_free && tau_free) s.values_.insert({-1, -1});
  return s;
}

ComponentSet ComponentSet::generated_by(const std::vector<SigmaTau>& gens) {
  ComponentSet s;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SigmaTau> current(s.values_.begin(), s.values_.end());
    for (const auto& a : current)
      for (const auto& g : gens) grew |= s.values_.insert(a * g).second;
  }
  return s;
}

std::string ComponentSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& v : values_) {
    os << (first ? "" : ", ") << '(' << v.sigma << ',' << v.tau << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Cost {
  long pos = 0;  // dimension for families without signature parameters
  long neg = 0;
};

Cost entry_cost(const AlgebraDescriptor& alg, int r, const MultiplicityEntry& e) {
  const long w = r + 1;
  if (!alg.has_signature_params()) return {w * entry_size(e), 0};
  if (r % 2 == 0) {
    const long m = r / 2;
    const auto& s = std::get<Sig>(e);
    return {(m + 1) * s.p + m * s.q, m * s.p + (m + 1) * s.q};
  }
  const long half = w * entry_size(e) / 2;
  return {half, half};
}

bool fits(const Cost& c, const Cost& budget) { return c.pos <= budget.pos && c.neg <= budget.neg; }

}  // namespace

std::vector<MultiplicityDatum> enumerate_orbit_data(const AlgebraDescriptor& alg) {
  if (alg.family() == Family::COMPLEX_SEMISIMPLE) {
    throw ValidationError("enumeration is not supported for the complex semisimple family");
  }
  const Family f = alg.family();
  const int max_r = alg.ambient_dim() - 1;
  const Cost total = alg.has_signature_params() ? Cost{alg.p(), alg.q()}
                                                : Cost{alg.ambient_dim(), 0};
  std::vector<MultiplicityDatum> out;
  std::vector<std::pair<int, MultiplicityEntry>> chosen;

  std::function<void(int, Cost)> recurse = [&](int r, Cost left) {
    if (left.pos == 0 && left.neg == 0) {
      out.push_back(MultiplicityDatum::from_entries(chosen));
      return;
    }
    if (r > max_r) return;
    recurse(r + 1, left);  // no entry at r
    if (required_kind(f, r) == EntryKind::Dim) {
      const bool even_only = (f == Family::SO_R && r % 2 != 0) || (f == Family::SP_R && r % 2 == 0);
      for (int k = even_only ? 2 : 1;; k += even_only ? 2 : 1) {
        MultiplicityEntry e = Dim{k};
        Cost c = entry_cost(alg, r, e);
        if (!fits(c, left)) break;
        chosen.emplace_back(r, e);
        recurse(r + 1, {left.pos - c.pos, left.neg - c.neg});
        chosen.pop_back();
      }
    } else {
      for (int a = 0;; ++a) {
        if (a > 0 && !fits(entry_cost(alg, r, Sig{a, 0}), left)) break;
        for (int b = 0;; ++b) {
          if (a == 0 && b == 0) continue;
          MultiplicityEntry e = Sig{a, b};
          Cost c = entry_cost(alg, r, e);
          if (!fits(c, left)) break;
          chosen.emplace_back(r, e);
          recurse(r + 1, {left.pos - c.pos, left.neg - c.neg});
          chosen.pop_back();
        }
      }
    }
  };
  recurse(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

long partition_count(int n) {
  // p(k) by the standard "largest part at most j" table
  std::vector<long> p(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return n < 0 ? 0 : p[n];
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

bool flips_odd_signatures(Family f) {
  return f == Family::SP_R || f == Family::SU || f == Family::SO_STAR;
}

void require_valid(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  if (auto v = validate_datum(alg, d); !v) {
    throw ValidationError("invalid datum for " + alg.to_string() + ": " + v.message);
  }
}

NegationVerdict sl_r_verdict(const MultiplicityDatum& d) {
  bool has_even = false;
  int sum_1mod4 = 0;
  for (const auto& [r, e] : d.entries()) {
    if (r % 2 == 0) has_even = true;
    if (r % 4 == 1) sum_1mod4 += entry_size(e);
  }
  NegationVerdict v;
  v.reason = NegationReason::JordanBlockCriterion;
  if (has_even) {
    v.stable = true;
    v.detail = "a Jordan block of odd size exists";
  } else {
    v.stable = sum_1mod4 % 2 == 0;
    v.detail = "all Jordan blocks have even size; number of blocks of size 2 mod 4 is " +
               std::to_string(sum_1mod4) + (v.stable ? " (even)" : " (odd)");
  }
  return v;
}

NegationVerdict odd_split_verdict(const MultiplicityDatum& d) {
  NegationVerdict v;
  v.stable = true;
  v.reason = NegationReason::OddSignaturesSplit;
  v.detail = "every odd-weight multiplicity space has split signature";
  for (const auto& [r, e] : d.entries()) {
    if (r % 2 == 0) continue;
    const auto& s = std::get<Sig>(e);
    if (s.p != s.q) {
      v.stable = false;
      v.reason = NegationReason::OddSignatureNotSplit;
      v.detail = "signature at r=" + std::to_string(r) + " is (" + std::to_string(s.p) + "," +
                 std::to_string(s.q) + "), not split";
      return v;
    }
  }
  return v;
}

NegationVerdict so_r_verdict(const MultiplicityDatum& d) {
  long parity = 0;
  bool cond1 = true;  // q_{4k} = p_{4k+2} = 0
  bool cond2 = true;  // p_{4k} = q_{4k+2} = 0
  for (const auto& [r, e] : d.entries()) {
    if (r % 8 == 2 || r % 8 == 4) parity += entry_size(e);
    if (r % 4 == 1) parity += entry_size(e) / 2;
    if (r % 4 == 0) {
      if (d.q_at(r) != 0) cond1 = false;
      if (d.p_at(r) != 0) cond2 = false;
    } else if (r % 4 == 2) {
      if (d.p_at(r) != 0) cond1 = false;
      if (d.q_at(r) != 0) cond2 = false;
    }
  }
  NegationVerdict v;
  v.reason = NegationReason::SOpqComponentCriterion;
  const bool odd = parity % 2 != 0;
  v.stable = !(odd && (cond1 || cond2));
  std::ostringstream os;
  os << "parity sum " << parity << (odd ? " (odd)" : " (even)") << "; condition q_4k=p_4k+2=0 "
     << (cond1 ? "holds" : "fails") << "; condition p_4k=q_4k+2=0 " << (cond2 ? "holds" : "fails");
  v.detail = os.str();
  return v;
}

}  // namespace

MultiplicityDatum negate_datum(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  if (!flips_odd_signatures(alg.family())) return d;
  std::vector<std::pair<int, MultiplicityEntry>> entries;
  for (const auto& [r, e] : d.entries()) {
    if (r % 2 != 0) {
      if (const auto* s = std::get_if<Sig>(&e)) {
        entries.emplace_back(r, Sig{s->q, s->p});
        continue;
      }
    }
    entries.emplace_back(r, e);
  }
  return MultiplicityDatum::from_entries(std::move(entries));
}

NegationVerdict negation_stable(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  require_valid(alg, d);
  if (d.is_zero_orbit()) return {true, NegationReason::ZeroOrbit, "zero orbit"};
  switch (alg.family()) {
    case Family::SL_R:
      return sl_r_verdict(d);
    case Family::SL_H:
    case Family::SP_HQ:
    case Family::COMPLEX_SEMISIMPLE:
      return {true, NegationReason::AlwaysStableFamily,
              "every nilpotent orbit of " + std::string(family_name(alg.family())) +
                  " is stable under negation"};
    case Family::SP_R:
    case Family::SU:
    case Family::SO_STAR:
      return odd_split_verdict(d);
    case Family::SO_R:
      return so_r_verdict(d);
  }
  throw InvariantError("unhandled family");
}

GibbsVerdict gibbs_verdict(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  require_valid(alg, d);
  if (d.is_zero_orbit()) return GibbsVerdict::NotDeterminedByThisCriterion;
  if (alg.family() == Family::COMPLEX_SEMISIMPLE) return GibbsVerdict::NoGibbsStates;
  return negation_stable(alg, d).stable ? GibbsVerdict::NoGibbsStates
                                        : GibbsVerdict::NotDeterminedByThisCriterion;
}

ComponentSet centralizer_components(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  if (alg.family() != Family::SO_R) {
    throw ValidationError("centralizer components are defined for so_r data only");
  }
  require_valid(alg, d);
  bool sigma_free = false, tau_free = false;
  for (const auto& [r, e] : d.entries()) {
    if (r % 2 != 0) continue;
    const int m = r / 2;
    const int p = d.p_at(r), q = d.q_at(r);
    if ((m % 2 == 0 && p >= 1) || (m % 2 == 1 && q >= 1)) sigma_free = true;
    if ((m % 2 == 0 && q >= 1) || (m % 2 == 1 && p >= 1)) tau_free = true;
  }
  return ComponentSet::product(sigma_free, tau_free);
}

ComponentSet centralizer_components_by_case(const AlgebraDescriptor& alg,
                                            const MultiplicityDatum& d) {
  if (alg.family() != Family::SO_R) {
    throw ValidationError("centralizer components are defined for so_r data only");
  }
  require_valid(alg, d);
  bool any_even = false, case2 = true, case3 = true;
  for (const auto& [r, e] : d.entries()) {
    if (r % 2 != 0) continue;
    any_even = true;
    if (r % 4 == 0) {
      if (d.q_at(r) != 0) case2 = false;
      if (d.p_at(r) != 0) case3 = false;
    } else {
      if (d.p_at(r) != 0) case2 = false;
      if (d.q_at(r) != 0) case3 = false;
    }
  }
  if (!any_even) return ComponentSet{};
  if (case2) return ComponentSet::product(true, false);
  if (case3) return ComponentSet::product(false, true);
  return ComponentSet::product(true, true);
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

bool in_class(int r, int residue, int modulus) { return r % modulus == residue; }

int field_value(const MultiplicityDatum& d, int r, EntryField f) {
  switch (f) {
    case EntryField::N: return d.size_at(r);
    case EntryField::P: return d.p_at(r);
    case EntryField::Q: return d.q_at(r);
  }
  return 0;
}

std::string field_name(EntryField f) {
  switch (f) {
    case EntryField::N: return "n";
    case EntryField::P: return "p";
    case EntryField::Q: return "q";
  }
  return "?";
}

std::string residue_text(int residue, int modulus) {
  return "r = " + std::to_string(residue) + " (mod " + std::to_string(modulus) + ")";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Condition exists(int residue, int modulus, EntryField f) {
  return {ExistsEntry{residue, modulus, f}};
}

}  // namespace

bool evaluate(const Condition& c, const MultiplicityDatum& d) {
  return std::visit(
      overloaded{
          [](const Always&) { return true; },
          [&](const ExistsEntry& e) {
            for (const auto& [r, entry] : d.entries())
              if (in_class(r, e.residue, e.modulus) && field_value(d, r, e.field) != 0) return true;
            return false;
          },
          [&](const AllSplit& s) {
            for (const auto& [r, entry] : d.entries())
              if (in_class(r, s.residue, s.modulus) && d.p_at(r) != d.q_at(r)) return false;
            return true;
          },
          [&](const ParityEven& p) {
            long sum = 0;
            for (const auto& t : p.terms)
              for (const auto& [r, entry] : d.entries())
                if (in_class(r, t.residue, t.modulus)) sum += d.size_at(r) / t.divisor;
            return sum % 2 == 0;
          },
          [&](const AnyOf& a) {
            return std::any_of(a.args.begin(), a.args.end(),
                               [&](const Condition& x) { return evaluate(x, d); });
          },
          [&](const AllOf& a) {
            return std::all_of(a.args.begin(), a.args.end(),
                               [&](const Condition& x) { return evaluate(x, d); });
          },
      },
      c.node);
}

std::string render(const Condition& c) {
  return std::visit(
      overloaded{
          [](const Always&) -> std::string { return "always"; },
          [](const ExistsEntry& e) -> std::string {
            return "exists " + residue_text(e.residue, e.modulus) + ": " + field_name(e.field) +
                   "_r != 0";
          },
          [](const AllSplit& s) -> std::string {
            return "for all " + residue_text(s.residue, s.modulus) + ": p_r = q_r";
          },
          [](const ParityEven& p) -> std::string {
            std::string out = "sum(";
            for (std::size_t k = 0; k < p.terms.size(); ++k) {
              const auto& t = p.terms[k];
              out += (k ? " + " : "");
              out += "n[" + residue_text(t.residue, t.modulus) + "]";
              if (t.divisor != 1) out += "/" + std::to_string(t.divisor);
            }
            return out + ") = 0 (mod 2)";
          },
          [](const AnyOf& a) -> std::string {
            std::string out = "(";
            for (std::size_t k = 0; k < a.args.size(); ++k)
              out += (k ? " OR " : "") + render(a.args[k]);
            return out + ")";
          },
          [](const AllOf& a) -> std::string {
            std::string out = "(";
            for (std::size_t k = 0; k < a.args.size(); ++k)
              out += (k ? " AND " : "") + render(a.args[k]);
            return out + ")";
          },
      },
      c.node);
}

std::vector<TableRow> negation_table() {
  const Condition odd_split{AllSplit{1, 2}};
  const Condition so_r{AnyOf{{
      Condition{AllOf{{
          Condition{AnyOf{{exists(0, 4, EntryField::Q), exists(2, 4, EntryField::P)}}},
          Condition{AnyOf{{exists(0, 4, EntryField::P), exists(2, 4, EntryField::Q)}}},
      }}},
      Condition{ParityEven{{{2, 8, 1}, {4, 8, 1}, {1, 4, 2}}}},
  }}};
  const Condition sl_r{AnyOf{{exists(0, 2, EntryField::N), Condition{ParityEven{{{1, 4, 1}}}}}}};
  return {
      {Family::SL_R, "sl(n,R)", sl_r},
      {Family::SO_R, "so(p,q)", so_r},
      {Family::SL_H, "sl(n,H)", Condition{Always{}}},
      {Family::SP_HQ, "sp(p,q)", Condition{Always{}}},
      {Family::SP_R, "sp(2n,R)", odd_split},
      {Family::SU, "su(p,q)", odd_split},
      {Family::SO_STAR, "so*(2n)", odd_split},
      {Family::COMPLEX_SEMISIMPLE, "complex semisimple", Condition{Always{}}},
  };
}

const TableRow& table_row(Family f) {
  static const std::vector<TableRow> table = negation_table();
  for (const auto& row : table)
    if (row.family == f) return row;
  throw InvariantError("missing table row");
}

}  // namespace nilorb
