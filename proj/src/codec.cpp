#include "nilorb/codec.hpp"

#include <sstream>

namespace nilorb::codec {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ValidationError(std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

std::string rows_of(int count, const std::string& row) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    out += row;
  }
  return out;
}

std::string alternating(int length, char first) {
  std::string s;
  char c = first;
  for (int i = 0; i < length; ++i) {
    s += c;
    c = c == '+' ? '-' : '+';
  }
  return s;
}

}  // namespace

Json descriptor_to_json(const AlgebraDescriptor& alg) {
  Json j;
  j["family"] = std::string(family_name(alg.family()));
  if (alg.has_signature_params()) {
    j["p"] = alg.p();
    j["q"] = alg.q();
  } else {
    j["n"] = alg.n();
  }
  return j;
}

AlgebraDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ValidationError("descriptor needs a string field 'family'");
  }
  const Family f = parse_family(j.at("family").get<std::string>());
  const auto probe = AlgebraDescriptor::make(f, 1, 1, 0);
  if (probe.has_signature_params()) return AlgebraDescriptor::make(f, 0, require_int(j, "p"), require_int(j, "q"));
  return AlgebraDescriptor::make(f, require_int(j, "n"), 0, 0);
}

Json entries_to_json(const MultiplicityDatum& d) {
  Json arr = Json::array();
  for (const auto& [r, e] : d.entries()) {
    Json item;
    item["r"] = r;
    if (const auto* s = std::get_if<Sig>(&e)) {
      item["sig"] = Json::array({s->p, s->q});
    } else {
      item["dim"] = std::get<Dim>(e).n;
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

Json datum_to_json(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  Json j = descriptor_to_json(alg);
  j["entries"] = entries_to_json(d);
  return j;
}

std::pair<AlgebraDescriptor, MultiplicityDatum> datum_from_json(
    const Json& j, const std::optional<AlgebraDescriptor>& fallback) {
  if (!j.is_object()) throw ValidationError("datum must be a JSON object");
  std::optional<AlgebraDescriptor> alg = fallback;
  if (j.contains("family")) alg = descriptor_from_json(j);
  if (!alg) throw ValidationError("datum needs an algebra (family fields or flags)");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ValidationError("datum needs an 'entries' array");
  }
  std::vector<std::pair<int, MultiplicityEntry>> entries;
  for (const auto& item : j.at("entries")) {
    if (!item.is_object()) throw ValidationError("each entry must be an object");
    const int r = require_int(item, "r");
    if (item.contains("sig")) {
      const auto& s = item.at("sig");
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
        throw ValidationError("'sig' must be a pair of integers");
      }
      entries.emplace_back(r, Sig{s[0].get<int>(), s[1].get<int>()});
    } else if (item.contains("dim")) {
      entries.emplace_back(r, Dim{require_int(item, "dim")});
    } else {
      throw ValidationError("entry needs 'sig' or 'dim'");
    }
  }
  auto d = MultiplicityDatum::from_entries(std::move(entries));
  if (auto v = validate_datum(*alg, d); !v) throw ValidationError("invalid datum: " + v.message);
  return {*alg, d};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols || cols == 0) {
      throw ValidationError("matrix rows must be arrays of equal nonzero length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& v = j[i][k];
      if (v.is_number_integer()) {
        m(i, k) = Scalar(v.get<long>());
      } else if (v.is_string()) {
        try {
          m(i, k) = Scalar::parse(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw ValidationError(std::string("bad matrix entry: ") + e.what());
        }
      } else {
        throw ValidationError("matrix entries must be strings or integers");
      }
    }
  }
  return m;
}

std::string tableau_text(const AlgebraDescriptor& alg, const MultiplicityDatum& d) {
  std::vector<std::string> parts;
  // longest rows first, as in the usual tableau pictures
  for (auto it = d.entries().rbegin(); it != d.entries().rend(); ++it) {
    const int len = it->first + 1;
    const auto& e = it->second;
    if (const auto* s = std::get_if<Sig>(&e)) {
      std::string rows = rows_of(s->p, alternating(len, '+'));
      std::string neg = rows_of(s->q, alternating(len, '-'));
      if (!rows.empty() && !neg.empty()) rows += ' ';
      parts.push_back(rows + neg);
    } else if (alg.family() == Family::SO_R || alg.family() == Family::SP_R) {
      // forms of the other parity: rows come in pairs of opposite signs
      const int half = std::get<Dim>(e).n / 2;
      std::string rows = rows_of(half, alternating(len, '+'));
      parts.push_back(rows + ' ' + rows_of(half, alternating(len, '-')));
    } else {
      parts.push_back(rows_of(std::get<Dim>(e).n, std::string(static_cast<std::size_t>(len), '#')));
    }
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " | ") + p;
  return out;
}

std::string datum_csv(const MultiplicityDatum& d) { return d.to_string(); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace nilorb::codec
