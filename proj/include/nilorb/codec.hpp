#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "nilorb/core.hpp"
#include "nilorb/exactla.hpp"
#include "nilorb/matrixlab.hpp"

namespace nilorb::codec {

/// Insertion-ordered so output is byte-stable.
using Json = nlohmann::ordered_json;

/// {"family":"so_r","p":2,"q":1} or {"family":"sl_r","n":3}.
Json descriptor_to_json(const AlgebraDescriptor& alg);
AlgebraDescriptor descriptor_from_json(const Json& j);

/// {"r":2,"sig":[1,0]} or {"r":3,"dim":2}.
Json entries_to_json(const MultiplicityDatum& d);
/// Descriptor fields followed by "entries".
Json datum_to_json(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// Reads "entries" and, when present, the descriptor fields. Without them
/// `fallback` is used; with neither, ValidationError. The datum is
/// canonicalised and validated against the descriptor.
std::pair<AlgebraDescriptor, MultiplicityDatum> datum_from_json(
    const Json& j, const std::optional<AlgebraDescriptor>& fallback = std::nullopt);

/// Rows of scalar strings ("1/2", "1/2-3/4*i"); integers are also accepted on
/// input.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// One-line signed-tableau rendering: one row of length r+1 per unit of
/// multiplicity, "+-+..." or "-+-..." from the signature, "#" cells when the
/// entry carries no signs.
std::string tableau_text(const AlgebraDescriptor& alg, const MultiplicityDatum& d);

/// CSV field for a datum: entries joined by spaces ("r=2:Sig(1;0)").
std::string datum_csv(const MultiplicityDatum& d);

/// Parses JSON text; malformed input becomes ValidationError.
Json parse_json(const std::string& text);

}  // namespace nilorb::codec
