#pragma once

#include <string>

#include "json.hpp"
#include "mvdef/gla.hpp"
#include "mvdef/harrison.hpp"

namespace mvdef {

// ordered_json keeps insertion order, so parse-then-dump of our own output
// is byte-identical.
using Json = nlohmann::ordered_json;

// Interchange documents carry a "kind" discriminator; see docs/formats.md.
enum class InputKind { Algebra, Presentation, LocalAlgebra };
InputKind input_kind(const Json& j);

Json algebra_to_json(const GradedLieAlgebra& L);
GradedLieAlgebra algebra_from_json(const Json& j);

Json presentation_to_json(const AlgebraPresentation& P);
AlgebraPresentation presentation_from_json(const Json& j);

Json local_algebra_to_json(const LocalAlgebra& A);
LocalAlgebra local_algebra_from_json(const Json& j);

Json polynomial_to_json(const PolyRing& R, const Polynomial& p);
Polynomial polynomial_from_json(const PolyRing& R, const Json& j);

Json load_json_file(const std::string& path); // throws std::runtime_error
void save_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j); // fixed serialization used everywhere

} // namespace mvdef
