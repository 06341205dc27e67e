#pragma once

// JSON encodings of the library's values. Scalars are {"num": [...], "den":
// [...]} with each side a list of [q_exp, t_exp, "coeff"] triples; polynomials
// are lists of {"exp": [...], "coeff": scalar}; expansions are
// {"basis", "N", "terms": [{"partition", "coeff"}]}.

#include <json.hpp>
#include <string>

#include "macrui/partition.hpp"
#include "macrui/polyring.hpp"
#include "macrui/symfun.hpp"

namespace macrui {

using Json = nlohmann::ordered_json;

Json to_json(const QTPolynomial& p);
Json to_json(const QTScalar& c);
Json to_json(const Partition& lambda);
Json to_json(const MultiPoly& f);
Json to_json(const SymExpansion& e);
Json to_json(const VarSpace& space);

QTPolynomial qt_polynomial_from_json(const Json& j);
QTScalar scalar_from_json(const Json& j);
Partition partition_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j, VarSpace space);
SymExpansion expansion_from_json(const Json& j);

/// "3,1" -> (3,1); "" -> empty partition. Throws kInvalidArgument on
/// non-integers, non-positive parts or increasing sequences.
Partition parse_partition(const std::string& text);

/// "1/2" or "3" -> rational. Throws kInvalidArgument.
Rational parse_rational(const std::string& text);

}  // namespace macrui
