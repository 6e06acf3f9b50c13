#pragma once

// JSON encodings shared by the CLI and any downstream consumer.
//
//   Partition             [3,2]           (empty partition: [])
//   Point                 [c, r]
//   CornerSet             [[c,r], ...]    sorted by (c, r)
//   SchurExpansion        {"degree":N,"terms":[{"partition":[..],"coeff":"-1"}, ...]}
//                         terms in descending lexicographic order, coefficients
//                         as decimal strings
//   QuotientDecomposition {"n":2,"core":[..],"quotient":[[..],[..]],"sign":1|-1|null}
//   SignedTableau         {"shape":[..],"rows":[[row 0], [row 1], ...]}

#include "schurpos/expansion.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/quotient.hpp"

#include <json.hpp>

#include <string_view>

namespace schurpos::json_io {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json encode(const Partition& p);
Json encode(const Point& p);
Json encode(const CornerSet& s);
Json encode(const SchurExpansion& f);
Json encode(const QuotientDecomposition& q);
Json encode(const SignedTableau& t);
Json encode(const BoundPair& b);

Partition decode_partition(const Json& j);
SchurExpansion decode_schur_expansion(const Json& j);

/// Command-line literal: comma-separated parts ("3,2"), empty string for the
/// empty partition.
Partition parse_partition_literal(std::string_view text);

}  // namespace schurpos::json_io
