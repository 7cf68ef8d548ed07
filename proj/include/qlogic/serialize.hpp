#ifndef QLOGIC_SERIALIZE_HPP
#define QLOGIC_SERIALIZE_HPP

// JSON documents for morphisms, algebras, groupoids, matrices and C*-specs.
//
//   object    : size (integer) or {"size": n, "labels": [...]}
//   morphism  : {"kind": "morphism", "backend": "fhilb"|"rel", "dom": object,
//                "cod": object, "payload": ...}
//               FHilb payload: cod rows of dom entries, each entry [re, im].
//               Rel payload: list of [i, j] pairs (i in dom, j in cod).
//   algebra   : {"kind": "algebra", "backend": ..., "carrier": object,
//                "mult": morphism, "unit": morphism}
//   groupoid  : {"kind": "groupoid", "objects": [...],
//                "morphisms": [{"name", "dom", "cod"}, ...],
//                "compose": [[f, g, h], ...]  (f o g = h),
//                optional "identities": {object: arrow},
//                optional "inverses": {arrow: arrow}}
//   matrix    : {"kind": "matrix", "n": n, "entries": n x n grid of [re, im]}
//   cstar     : {"kind": "cstar", "blocks": [n1, ...]} or a bare list

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "qlogic/backend.hpp"
#include "qlogic/cstar.hpp"
#include "qlogic/frobenius.hpp"
#include "qlogic/groupoid.hpp"

namespace qlogic {

using Json = nlohmann::ordered_json;

Json object_to_json(const Object& o);
Object object_from_json(const Json& j, Backend backend, const std::string& context);

Json morphism_to_json(const Morphism& m);
/// `inherited` supplies the backend when the document omits it.
Morphism morphism_from_json(const Json& j, const std::string& context = "morphism",
                            std::optional<Backend> inherited = std::nullopt);

Json algebra_to_json(const FrobeniusAlgebra& alg);
FrobeniusAlgebra algebra_from_json(const Json& j);

Json groupoid_to_json(const GroupoidSpec& spec);
GroupoidSpec groupoid_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json cstar_to_json(const CStarSpec& spec);
CStarSpec cstar_from_json(const Json& j);

using Document = std::variant<GroupoidSpec, FrobeniusAlgebra, ComplexMatrix, CStarSpec, Morphism>;

/// Throws ParseError with "line L, column C" context on malformed JSON and a
/// field path (e.g. "morphisms[2].dom") on schema errors.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);
Json document_to_json(const Document& doc);

}  // namespace qlogic

#endif  // QLOGIC_SERIALIZE_HPP
