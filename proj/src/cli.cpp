#include "nilorb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nilorb/codec.hpp"
#include "nilorb/matrixlab.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

namespace {

using codec::Json;

struct Options {
  std::string family;
  std::optional<int> n, p, q;
  std::string datum;
  std::string input;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  int max_dim = 5;
};

AlgebraDescriptor algebra_from(const Options& o) {
  if (o.family.empty()) throw ValidationError("--family is required");
  const Family f = parse_family(o.family);
  return AlgebraDescriptor::make(f, o.n.value_or(0), o.p.value_or(0), o.q.value_or(0));
}

std::optional<AlgebraDescriptor> optional_algebra(const Options& o) {
  if (o.family.empty()) return std::nullopt;
  return algebra_from(o);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// --datum takes inline JSON or a file path.
std::string datum_text(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return read_file(arg);
}

Json verdict_json(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  const auto v = negation_stable(alg, d);
  Json j = codec::datum_to_json(alg, d);
  j["stable"] = v.stable;
  j["reason"] = std::string(reason_name(v.reason));
  j["gibbs"] = std::string(gibbs_name(gibbs_verdict(alg, d)));
  return j;
}

const char* kCsvHeader = "family,params,datum,stable,gibbs,reason";

std::string csv_row(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  const auto v = negation_stable(alg, d);
  std::ostringstream os;
  os << family_name(alg.family()) << ',' << alg.params_text() << ',' << codec::datum_csv(d) << ','
     << (v.stable ? "true" : "false") << ',' << gibbs_name(gibbs_verdict(alg, d)) << ','
     << reason_name(v.reason);
  return os.str();
}

std::string text_row(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  const auto v = negation_stable(alg, d);
  std::ostringstream os;
  os << codec::tableau_text(alg, d) << "  [" << d.to_string() << "]  "
     << (v.stable ? "stable" : "not stable") << "  " << gibbs_name(gibbs_verdict(alg, d));
  return os.str();
}

void check_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "text") throw ValidationError("--format must be json, csv or text");
}

void emit_list(const AlgebraDescriptor& alg, const std::vector<MultiplicityDatum>& data,
               const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& d : data) arr.push_back(verdict_json(alg, d));
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << kCsvHeader << '\n';
    for (const auto& d : data) out << csv_row(alg, d) << '\n';
  } else {
    out << alg.to_string() << '\n';
    for (const auto& d : data) out << "  " << text_row(alg, d) << '\n';
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_format(o.format);
  const auto alg = algebra_from(o);
  emit_list(alg, enumerate_orbit_data(alg), o.format, out);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  check_format(o.format);
  if (o.datum.empty()) throw ValidationError("--datum is required");
  auto [alg, d] = codec::datum_from_json(codec::parse_json(datum_text(o.datum)), optional_algebra(o));
  if (o.format == "json") {
    Json j = verdict_json(alg, d);
    j["detail"] = negation_stable(alg, d).detail;
    out << j.dump(2) << '\n';
  } else {
    emit_list(alg, {d}, o.format, out);
  }
  return 0;
}

Json component_json(SigmaTau st) { return Json::array({st.sigma, st.tau}); }

int cmd_matrix_check(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw ValidationError("--input is required");
  const Json j = codec::parse_json(read_file(o.input));
  if (!j.is_object() || !j.contains("alg") || !j.contains("matrix")) {
    throw ValidationError("matrix file needs 'alg' and 'matrix'");
  }
  const auto alg = codec::descriptor_from_json(j.at("alg"));
  require_matrix_family(alg);
  const AmbientSpace amb =
      j.contains("form") ? make_ambient(alg, codec::matrix_from_json(j.at("form"))) : standard_ambient(alg);
  const Matrix x = codec::matrix_from_json(j.at("matrix"));
  const auto triple = complete_standard_triple(x, amb, o.seed);
  const auto mv = decide_negation_matrix(triple);
  const auto criterion = negation_stable(alg, mv.datum);
  if (criterion.stable != mv.verdict.stable) {
    throw InvariantError("matrix verdict disagrees with the datum criterion for " + mv.datum.to_string());
  }

  Json b;
  b["alg"] = codec::descriptor_to_json(alg);
  b["datum"] = codec::entries_to_json(mv.datum);
  b["negated_datum"] = codec::entries_to_json(mv.negated_datum);
  b["stable"] = mv.verdict.stable;
  b["reason"] = std::string(reason_name(mv.verdict.reason));
  b["gibbs"] = std::string(gibbs_name(gibbs_verdict(alg, mv.datum)));
  b["detail"] = mv.verdict.detail;
  b["criterion_agrees"] = true;
  b["triple"] = {{"x", codec::matrix_to_json(triple.x)},
                 {"y", codec::matrix_to_json(triple.y)},
                 {"h", codec::matrix_to_json(triple.h)}};
  b["conjugator"] = mv.conjugator ? codec::matrix_to_json(*mv.conjugator) : Json(nullptr);
  if (mv.conjugator_det_sign) b["conjugator_det_sign"] = *mv.conjugator_det_sign;
  if (mv.conjugator_component) b["conjugator_component"] = component_json(*mv.conjugator_component);
  if (mv.centralizer) {
    Json comps = Json::array();
    for (const auto& st : mv.centralizer->values()) comps.push_back(component_json(st));
    b["centralizer_components"] = comps;
  }
  if (mv.centralizer_has_negative_det) b["centralizer_has_negative_det"] = *mv.centralizer_has_negative_det;
  out << b.dump(2) << '\n';
  return 0;
}

/// Small instances of every family for spot evaluation of the table.
std::vector<AlgebraDescriptor> table_instances(Family f) {
  std::vector<AlgebraDescriptor> out;
  switch (f) {
    case Family::SO_R:
    case Family::SU:
    case Family::SP_HQ: {
      const int bound = f == Family::SO_R ? 6 : f == Family::SU ? 5 : 3;
      for (int s = 1; s <= bound; ++s)
        for (int p = 0; p <= s; ++p) out.push_back(AlgebraDescriptor::make(f, 0, p, s - p));
      break;
    }
    default: {
      const int bound = f == Family::SP_R ? 3 : f == Family::SL_H ? 3 : f == Family::SO_STAR ? 4 : 6;
      for (int n = 1; n <= bound; ++n) out.push_back(AlgebraDescriptor::make(f, n, 0, 0));
    }
  }
  return out;
}

/// Complex algebras are not enumerated; partitions of n serve as samples.
std::vector<MultiplicityDatum> table_samples(const AlgebraDescriptor& alg) {
  if (alg.family() != Family::COMPLEX_SEMISIMPLE) return enumerate_orbit_data(alg);
  return enumerate_orbit_data(AlgebraDescriptor::sl_r(alg.n()));
}

int cmd_table1(const Options& o, std::ostream& out) {
  check_format(o.format);
  Json rows = Json::array();
  long discrepancies = 0;
  for (const auto& row : negation_table()) {
    Json spots = Json::array();
    long checked = 0, mismatched = 0;
    for (const auto& alg : table_instances(row.family)) {
      for (const auto& d : table_samples(alg)) {
        const bool cond = evaluate(row.stable_when, d);
        const bool crit = negation_stable(alg, d).stable;
        ++checked;
        if (cond != crit) ++mismatched;
        spots.push_back({{"params", alg.params_text()},
                         {"entries", codec::entries_to_json(d)},
                         {"condition", cond},
                         {"criterion", crit}});
      }
    }
    discrepancies += mismatched;
    rows.push_back({{"family", std::string(family_name(row.family))},
                    {"label", row.label},
                    {"stable_when", render(row.stable_when)},
                    {"checked", checked},
                    {"discrepancies", mismatched},
                    {"spots", spots}});
  }
  if (o.format == "json") {
    out << Json{{"rows", rows}, {"discrepancies", discrepancies}}.dump(2) << '\n';
  } else {
    const char sep = o.format == "csv" ? ',' : '\t';
    if (o.format == "csv") out << "family,label,stable_when,checked,discrepancies\n";
    for (const auto& r : rows) {
      std::string cond = r["stable_when"].get<std::string>();
      if (o.format == "csv") cond = '"' + cond + '"';
      out << r["family"].get<std::string>() << sep << r["label"].get<std::string>() << sep << cond << sep
          << r["checked"].get<long>() << sep << r["discrepancies"].get<long>() << '\n';
    }
  }
  if (discrepancies != 0) throw InvariantError("table conditions disagree with the criteria");
  return 0;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  if (o.max_dim < 1) throw ValidationError("--max-dim must be >= 1");
  const auto cases = oracle_sweep(sweep_algebras(o.max_dim));
  long bad = 0;
  for (const auto& c : cases) {
    if (c.agrees()) continue;
    ++bad;
    out << "DISAGREE " << c.alg.to_string() << ' ' << c.datum.to_string() << " criterion="
        << c.criterion_stable << " matrix=" << c.matrix_stable << " round_trip=" << c.round_trip
        << (c.error.empty() ? "" : " error=" + c.error) << '\n';
  }
  out << "selftest max-dim " << o.max_dim << ": " << cases.size() << " data, " << bad << " disagreements\n";
  return bad == 0 ? 0 : 3;
}

}  // namespace

std::vector<AlgebraDescriptor> sweep_algebras(int max_dim) {
  std::vector<AlgebraDescriptor> out;
  for (int n = 2; n <= max_dim; ++n) out.push_back(AlgebraDescriptor::sl_r(n));
  for (int n = 1; 2 * n <= max_dim; ++n) out.push_back(AlgebraDescriptor::sp_r(n));
  for (int s = 2; s <= max_dim; ++s)
    for (int p = 0; p <= s; ++p) out.push_back(AlgebraDescriptor::su(p, s - p));
  for (int s = 2; s <= max_dim; ++s)
    for (int p = 1; p < s; ++p) out.push_back(AlgebraDescriptor::so_r(p, s - p));
  return out;
}

std::vector<SweepCase> oracle_sweep(const std::vector<AlgebraDescriptor>& algebras) {
  std::vector<SweepCase> out;
  for (const auto& alg : algebras) {
    for (const auto& d : enumerate_orbit_data(alg)) {
      if (d.is_zero_orbit()) continue;
      SweepCase c{alg, d, false, false, false, {}};
      c.criterion_stable = negation_stable(alg, d).stable;
      try {
        const auto t = build_model(alg, d);
        c.round_trip = extract_datum(t) == d;
        c.matrix_stable = decide_negation_matrix(t).verdict.stable;
      } catch (const std::exception& e) {
        c.error = e.what();
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilpotent orbit negation and Gibbs state verdicts"};
  app.require_subcommand(1);
  Options o;

  auto add_alg = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "sl_r, so_r, sp_r, su, sl_h, sp_hq, so_star, complex");
    sub->add_option("--n", o.n, "rank parameter");
    sub->add_option("--p", o.p, "signature parameter p");
    sub->add_option("--q", o.q, "signature parameter q");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every orbit datum with its verdicts");
  add_alg(enumerate);
  add_format(enumerate);
  auto* classify = app.add_subcommand("classify", "verdicts for one datum");
  add_alg(classify);
  add_format(classify);
  classify->add_option("--datum", o.datum, "datum JSON, inline or a file path");
  auto* matrix = app.add_subcommand("matrix-check", "run the exact matrix pipeline on a nilpotent");
  matrix->add_option("--input", o.input, "JSON file {\"alg\":{...},\"matrix\":[[...]]}");
  matrix->add_option("--seed", o.seed, "randomise the triple completion");
  auto* table = app.add_subcommand("table1", "negation conditions per family, checked on small cases");
  add_format(table);
  auto* self = app.add_subcommand("selftest", "oracle agreement sweep");
  self->add_option("--max-dim", o.max_dim, "largest ambient dimension")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*matrix) return cmd_matrix_check(o, out);
    if (*table) return cmd_table1(o, out);
    return cmd_selftest(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace nilorb
