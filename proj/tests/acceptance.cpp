// Acceptance criteria: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "nilorb/cli.hpp"
#include "nilorb/codec.hpp"
#include "nilorb/gibbs.hpp"
#include "nilorb/matrixlab.hpp"
#include "nilorb/orbits.hpp"
#include "support.hpp"

using namespace nilorb;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

/// Collects failures; the first few are reported.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ << " checks";
    if (failures_ != 0) os << ", " << failures_ << " failed: " << first_;
    os << ")";
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

MultiplicityDatum datum(std::vector<std::pair<int, MultiplicityEntry>> e) {
  return MultiplicityDatum::from_entries(std::move(e));
}

std::vector<AlgebraDescriptor> sweep_list() {
  std::vector<AlgebraDescriptor> out;
  for (int n = 2; n <= 6; ++n) out.push_back(AlgebraDescriptor::sl_r(n));
  for (int n = 1; n <= 3; ++n) out.push_back(AlgebraDescriptor::sp_r(n));
  for (int s = 2; s <= 5; ++s)
    for (int p = 0; p <= s; ++p) out.push_back(AlgebraDescriptor::su(p, s - p));
  for (int s = 2; s <= 6; ++s)
    for (int p = 1; p < s; ++p) out.push_back(AlgebraDescriptor::so_r(p, s - p));
  return out;
}

const std::vector<SweepCase>& sweep() {
  static const std::vector<SweepCase> cases = oracle_sweep(sweep_list());
  return cases;
}

Outcome sl2_suite() {
  Tally t;
  for (int r = 0; r <= 12; ++r) {
    const auto m = build_irreducible(r);
    const Matrix b = build_invariant_form(r).b;
    const std::string at = " r=" + std::to_string(r);
    t.require(commutator(m.h, m.x) == m.x * Scalar(2), "[h,x]" + at);
    t.require(commutator(m.h, m.y) == m.y * Scalar(-2), "[h,y]" + at);
    t.require(commutator(m.x, m.y) == m.h, "[x,y]" + at);
    for (const Matrix* z : {&m.x, &m.y, &m.h})
      t.require((z->transpose() * b + b * *z).is_zero(), "B invariance" + at);
    const auto last = static_cast<std::size_t>(r);
    if (r % 2 == 0) {
      t.require(signature_symmetric(b) == Inertia{r / 2 + 1, r / 2, 0}, "signature" + at);
      t.require(sgn(b(last / 2, last / 2).re()) > 0, "V(0) positive" + at);
    } else {
      const std::size_t i = last / 2 + 1;  // weight -1
      Vector e(last + 1);
      e[i] = 1;
      t.require(b.is_antisymmetric() && sgn((b * (m.x * e))[i].re()) >= 0, "odd convention" + at);
    }
    const Matrix u = build_negation_intertwiner(r);
    const Matrix ui = inverse(u);
    t.require(u * m.x * ui == -m.x && u * m.y * ui == -m.y && u * m.h * ui == m.h, "u conjugation" + at);
    t.require(u.transpose() * b * u == b * Scalar(r % 2 == 0 ? 1 : -1), "u*B" + at);
  }
  return t.outcome("0 <= r <= 12");
}

Outcome closed_forms() {
  Tally t;
  for (int r = 0; r <= 10; r += 2)
    t.require(sigma_tau_tensor_negation(r) ==
                  sigma_tau(build_negation_intertwiner(r, true), build_invariant_form(r).b),
              "even r=" + std::to_string(r));
  for (int r = 1; r <= 9; r += 2)
    for (int s = 1; s <= 9; s += 2) {
      const auto form = tensor_form({build_invariant_form(r).b, FormKind::Skew},
                                    {build_invariant_form(s).b, FormKind::Skew});
      const Matrix u = kron(build_negation_intertwiner(r), build_negation_intertwiner(s));
      t.require(sigma_tau_tensor_negation(r, s) == sigma_tau(u, form.matrix),
                "odd pair " + std::to_string(r) + "," + std::to_string(s));
    }
  return t.outcome("even r <= 10, odd pairs <= 9");
}

Outcome tausigma_rules() {
  Tally t;
  std::mt19937_64 rng(2024);
  int cases = 0;
  auto pw = [](int s, int e) { return e % 2 == 0 ? 1 : s; };
  while (cases < 250) {
    const int p2 = static_cast<int>(rng() % 4), q2 = static_cast<int>(rng() % 4);
    const int p1 = static_cast<int>(rng() % 3), q1 = static_cast<int>(rng() % 3);
    if (p2 + q2 == 0 || p2 + q2 > 5 || p1 + q1 == 0 || p1 + q1 > 3) continue;
    ++cases;
    const Matrix f2 = testing::diag_form(p2, q2), f1 = testing::diag_form(p1, q1);
    const Matrix g = testing::random_orthogonal(f2, rng);
    const Matrix h = testing::random_orthogonal(f1, rng);
    const auto sg = sigma_tau(g, f2), sh = sigma_tau(h, f1);
    t.require(sigma_tau(direct_sum({g, h}), direct_sum({f2, f1})) == sg * sh, "direct sum");
    const auto st = sigma_tau(kron(Matrix::identity(f1.rows()), g), kron(f1, f2));
    t.require(st.sigma == pw(sg.sigma, p1) * pw(sg.tau, q1) && st.tau == pw(sg.tau, p1) * pw(sg.sigma, q1),
              "tensor rule");
  }
  return t.outcome(std::to_string(cases) + " random isometries");
}

Outcome oracle_agreement() {
  Tally t;
  for (const auto& c : sweep())
    t.require(c.error.empty() && c.criterion_stable == c.matrix_stable,
              c.alg.to_string() + " " + c.datum.to_string() + (c.error.empty() ? "" : " (" + c.error + ")"));
  return t.outcome(std::to_string(sweep().size()) + " nonzero data");
}

Outcome round_trip() {
  Tally t;
  for (const auto& c : sweep()) t.require(c.round_trip, c.alg.to_string() + " " + c.datum.to_string());
  return t.outcome(std::to_string(sweep().size()) + " nonzero data");
}

Outcome ground_truths() {
  Tally t;
  const auto sl2 = AlgebraDescriptor::sl_r(2);
  const auto d_sl2 = datum({{1, Dim{1}}});
  t.require(!negation_stable(sl2, d_sl2).stable, "sl(2,R) [2] criterion");
  t.require(!decide_negation_matrix(build_model(sl2, d_sl2)).verdict.stable, "sl(2,R) [2] matrix");

  const auto so21 = AlgebraDescriptor::so_r(2, 1);
  const auto d_so = datum({{2, Sig{1, 0}}});
  t.require(!negation_stable(so21, d_so).stable, "so(2,1) criterion");
  t.require(!decide_negation_matrix(build_model(so21, d_so)).verdict.stable, "so(2,1) matrix");
  // so(2,1) and sl(2,R) have the same nonzero nilpotent orbits up to sign: both verdicts agree
  t.require(negation_stable(so21, d_so).stable == negation_stable(sl2, d_sl2).stable, "so(2,1) ~ sl(2,R)");

  const auto sp2 = AlgebraDescriptor::sp_r(2);
  const auto model = build_model(sp2, datum({{1, Sig{1, 1}}}));
  const auto v = decide_negation_matrix(model);
  t.require(v.verdict.stable && negation_stable(sp2, v.datum).stable, "sp(4,R) Sig(1,1) stable");
  bool witnessed = false;
  if (v.conjugator) {
    const Matrix& a = *v.conjugator;
    const Matrix& b = *model.ambient.form;
    witnessed = a * model.x * inverse(a) == -model.x && a.transpose() * b * a == b;
  }
  t.require(witnessed, "sp(4,R) symplectic conjugator verified");

  for (const auto& alg : {AlgebraDescriptor::sp_hq(1, 1), AlgebraDescriptor::sp_hq(2, 1), AlgebraDescriptor::sl_h(2),
                          AlgebraDescriptor::sl_h(3)})
    for (const auto& d : enumerate_orbit_data(alg))
      t.require(negation_stable(alg, d).stable, alg.to_string() + " always stable");
  return t.outcome("sl(2,R), so(2,1), sp(4,R), sp(p,q), sl(n,H)");
}

Outcome gibbs_geometry() {
  Tally t;
  std::ostringstream os;
  const auto sl2 = complete_standard_triple(Matrix{{0, 1}, {0, 0}}, standard_ambient(AlgebraDescriptor::sl_r(2)));
  const auto so21 = build_model(AlgebraDescriptor::so_r(2, 1), datum({{2, Sig{1, 0}}}));
  double flow = 0;
  for (const auto* tr : {&sl2, &so21})
    for (double time : {-2.0, -1.0, std::log(2.0), 1.0, 2.0}) flow = std::max(flow, gibbs::check_conical_flow(*tr, time));
  t.require(flow < 1e-9, "conical flow");

  double omega = 0, lambda = 0;
  for (const auto* tr : {&sl2, &so21}) {
    const auto chart = gibbs::make_chart(*tr);
    for (double s : {0.5, 2.0, 3.0}) {
      const auto r = gibbs::check_homogeneity(chart, s, 50, 17);
      omega = std::max(omega, r.omega_error);
      lambda = std::max(lambda, r.lambda_error);
    }
  }
  t.require(omega < 1e-9, "omega homogeneity");
  t.require(lambda < 1e-9, "lambda homogeneity");

  const auto vol = gibbs::check_volume_scaling({1, 2, 4, 8});
  t.require(vol.max_relative_deviation < 0.01, "volume scaling");

  std::mt19937_64 rng(99);
  const auto samples = gibbs::sample_sl2_cone(10000, 4.0, rng);
  gibbs::CMatrix beta(2, 2);
  beta << 0.3, -1.2, 0.7, -0.3;
  t.require(gibbs::check_divergence_bound(beta, samples), "divergence bound");

  os << "flow " << flow << ", omega " << omega << ", lambda " << lambda << ", volume dev "
     << vol.max_relative_deviation;
  return t.outcome(os.str());
}

Outcome table_rendering() {
  Tally t;
  std::ostringstream out, err;
  const int status = run_cli({"table1"}, out, err);
  t.require(status == 0, "table1 exit status " + std::to_string(status));
  if (status != 0) return t.outcome("table1");
  const auto j = codec::Json::parse(out.str());
  t.require(j["discrepancies"] == 0, "table1 spot discrepancies");

  // the rendered conditions, evaluated on the sweep, must reproduce the verdicts
  std::map<std::string, std::string> rendered;
  for (const auto& row : j["rows"]) rendered[row["family"]] = row["stable_when"];
  long checked = 0;
  for (const auto& alg : sweep_list()) {
    const auto& row = table_row(alg.family());
    t.require(rendered[std::string(family_name(alg.family()))] == render(row.stable_when), "rendering");
    for (const auto& d : enumerate_orbit_data(alg)) {
      ++checked;
      t.require(evaluate(row.stable_when, d) == negation_stable(alg, d).stable,
                alg.to_string() + " " + d.to_string());
    }
  }
  return t.outcome(std::to_string(checked) + " sweep data");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "sl2 representation suite", sl2_suite, 1.0},
      {2, "sigma/tau closed forms", closed_forms, 10.0},
      {3, "direct-sum and tensor rules", tausigma_rules, 60.0},
      {4, "oracle agreement sweep", oracle_agreement, 120.0},
      {5, "round trip extract(build_model(d)) = d", round_trip, 120.0},
      {6, "known ground truths", ground_truths, 60.0},
      {7, "Gibbs geometry", gibbs_geometry, 60.0},
      {8, "negation condition table", table_rendering, 60.0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " - " << o.note << ", "
              << secs << " s" << (in_time ? "" : " (over the time budget)") << std::endl;
  }
  return all ? 0 : 1;
}
