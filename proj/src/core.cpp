#include "nilorb/core.hpp"

#include <array>
#include <sstream>

namespace nilorb {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::SL_R, "sl_r"},
    {Family::SO_R, "so_r"},
    {Family::SP_R, "sp_r"},
    {Family::SU, "su"},
    {Family::SL_H, "sl_h"},
    {Family::SP_HQ, "sp_hq"},
    {Family::SO_STAR, "so_star"},
    {Family::COMPLEX_SEMISIMPLE, "complex"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

AlgebraDescriptor AlgebraDescriptor::make(Family f, int n, int p, int q) {
  AlgebraDescriptor a(f, n, p, q);
  if (a.has_signature_params()) {
    if (p < 0 || q < 0 || p + q < 1) {
      throw ValidationError("signature parameters need p >= 0, q >= 0, p + q >= 1");
    }
    a.n_ = 0;
  } else {
    if (n < 1) throw ValidationError("parameter n must be >= 1");
    a.p_ = a.q_ = 0;
  }
  return a;
}

bool AlgebraDescriptor::has_signature_params() const {
  return family_ == Family::SO_R || family_ == Family::SU || family_ == Family::SP_HQ;
}

int AlgebraDescriptor::ambient_dim() const {
  if (has_signature_params()) return p_ + q_;
  if (family_ == Family::SP_R) return 2 * n_;
  return n_;
}

std::string AlgebraDescriptor::params_text() const {
  std::ostringstream os;
  if (has_signature_params()) os << "p=" << p_ << ";q=" << q_;
  else os << "n=" << n_;
  return os.str();
}

std::string AlgebraDescriptor::to_string() const {
  return std::string(family_name(family_)) + "(" + params_text() + ")";
}

// ---------------------------------------------------------------------------

int entry_size(const MultiplicityEntry& e) {
  if (const auto* d = std::get_if<Dim>(&e)) return d->n;
  return std::get<Sig>(e).total();
}

bool entry_is_zero(const MultiplicityEntry& e) { return entry_size(e) == 0; }

std::string entry_text(const MultiplicityEntry& e) {
  std::ostringstream os;
  if (const auto* d = std::get_if<Dim>(&e)) os << "Dim(" << d->n << ")";
  else os << "Sig(" << std::get<Sig>(e).p << ";" << std::get<Sig>(e).q << ")";
  return os.str();
}

EntryKind required_kind(Family f, int r) {
  const bool odd = r % 2 != 0;
  switch (f) {
    case Family::SL_R:
    case Family::SL_H:
    case Family::COMPLEX_SEMISIMPLE:
      return EntryKind::Dim;
    case Family::SU:
      return EntryKind::Sig;
    case Family::SO_R:
    case Family::SP_HQ:
      return odd ? EntryKind::Dim : EntryKind::Sig;
    case Family::SP_R:
    case Family::SO_STAR:
      return odd ? EntryKind::Sig : EntryKind::Dim;
  }
  return EntryKind::Dim;
}

MultiplicityDatum MultiplicityDatum::from_entries(
    std::vector<std::pair<int, MultiplicityEntry>> entries) {
  MultiplicityDatum d;
  for (auto& [r, e] : entries) {
    if (r < 0) throw ValidationError("highest weight r must be >= 0");
    if (const auto* dim = std::get_if<Dim>(&e); dim && dim->n < 0) {
      throw ValidationError("negative dimension at r=" + std::to_string(r));
    }
    if (const auto* sig = std::get_if<Sig>(&e); sig && (sig->p < 0 || sig->q < 0)) {
      throw ValidationError("negative signature at r=" + std::to_string(r));
    }
    if (entry_is_zero(e)) continue;
    if (!d.entries_.emplace(r, e).second) {
      throw ValidationError("repeated highest weight r=" + std::to_string(r));
    }
  }
  return d;
}

std::optional<MultiplicityEntry> MultiplicityDatum::at(int r) const {
  auto it = entries_.find(r);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

int MultiplicityDatum::size_at(int r) const {
  auto it = entries_.find(r);
  return it == entries_.end() ? 0 : entry_size(it->second);
}

int MultiplicityDatum::p_at(int r) const {
  auto it = entries_.find(r);
  if (it == entries_.end()) return 0;
  const auto* s = std::get_if<Sig>(&it->second);
  return s ? s->p : 0;
}

int MultiplicityDatum::q_at(int r) const {
  auto it = entries_.find(r);
  if (it == entries_.end()) return 0;
  const auto* s = std::get_if<Sig>(&it->second);
  return s ? s->q : 0;
}

bool MultiplicityDatum::is_zero_orbit() const {
  return entries_.size() == 1 && entries_.begin()->first == 0;
}

std::string MultiplicityDatum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, e] : entries_) {
    os << (first ? "" : " ") << "r=" << r << ":" << entry_text(e);
    first = false;
  }
  if (first) os << "{}";
  return os.str();
}

MultiplicityDatum zero_orbit_datum(const AlgebraDescriptor& alg) {
  MultiplicityEntry e = required_kind(alg.family(), 0) == EntryKind::Sig
                            ? MultiplicityEntry{Sig{alg.p(), alg.q()}}
                            : MultiplicityEntry{Dim{alg.ambient_dim()}};
  return MultiplicityDatum::from_entries({{0, e}});
}

// ---------------------------------------------------------------------------

namespace {

ValidationResult fail(std::string msg, std::optional<int> r = std::nullopt) {
  return ValidationResult{false, std::move(msg), r};
}

bool needs_even_dimension(Family f, int r) {
  // symplectic multiplicity spaces over R
  return (f == Family::SO_R && r % 2 != 0) || (f == Family::SP_R && r % 2 == 0);
}

}  // namespace

ValidationResult validate_datum(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  const Family f = alg.family();
  long dim_sum = 0;
  long pos = 0, neg = 0;
  for (const auto& [r, e] : d.entries()) {
    const std::string at = " at r=" + std::to_string(r);
    if (entry_is_zero(e)) return fail("zero entry" + at + " (not canonical)", r);
    const EntryKind want = required_kind(f, r);
    const bool is_sig = std::holds_alternative<Sig>(e);
    if (want == EntryKind::Sig && !is_sig) {
      return fail("expected a signature entry" + at + " for " + std::string(family_name(f)), r);
    }
    if (want == EntryKind::Dim && is_sig) {
      return fail("expected a dimension entry" + at + " for " + std::string(family_name(f)), r);
    }
    const int size = entry_size(e);
    if (needs_even_dimension(f, r) && size % 2 != 0) {
      return fail("symplectic multiplicity space must have even dimension" + at, r);
    }
    dim_sum += static_cast<long>(r + 1) * size;
    if (alg.has_signature_params()) {
      if (r % 2 == 0) {
        const long m = r / 2;
        const auto& s = std::get<Sig>(e);
        pos += (m + 1) * s.p + m * s.q;
        neg += m * s.p + (m + 1) * s.q;
      } else {
        const long half = static_cast<long>(r + 1) * size / 2;
        pos += half;
        neg += half;
      }
    }
  }
  if (dim_sum != alg.ambient_dim()) {
    return fail("dimension mismatch: sum of (r+1)*size is " + std::to_string(dim_sum) +
                ", ambient dimension is " + std::to_string(alg.ambient_dim()));
  }
  if (alg.has_signature_params() && (pos != alg.p() || neg != alg.q())) {
    return fail("signature mismatch: data give (" + std::to_string(pos) + "," +
                std::to_string(neg) + "), ambient is (" + std::to_string(alg.p()) + "," +
                std::to_string(alg.q()) + ")");
  }
  return {};
}

std::string_view reason_name(NegationReason r) {
  switch (r) {
    case NegationReason::AlwaysStableFamily: return "AlwaysStableFamily";
    case NegationReason::OddSignaturesSplit: return "OddSignaturesSplit";
    case NegationReason::OddSignatureNotSplit: return "OddSignatureNotSplit";
    case NegationReason::JordanBlockCriterion: return "JordanBlockCriterion";
    case NegationReason::SOpqComponentCriterion: return "SOpqComponentCriterion";
    case NegationReason::ZeroOrbit: return "ZeroOrbit";
  }
  return "?";
}

std::string_view gibbs_name(GibbsVerdict g) {
  return g == GibbsVerdict::NoGibbsStates ? "NoGibbsStates" : "NotDeterminedByThisCriterion";
}

}  // namespace nilorb
