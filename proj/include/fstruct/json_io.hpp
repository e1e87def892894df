#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "fstruct/curves.hpp"
#include "fstruct/lattice.hpp"
#include "fstruct/polyhedra.hpp"
#include "fstruct/structure.hpp"

namespace fstruct::io {

// std::map backed, so keys come out sorted.
using Json = nlohmann::json;

[[nodiscard]] Json read_json_file(const std::string& path);
[[nodiscard]] std::string dump(const Json& j);

// Accepts "p/q" strings and plain integers.
[[nodiscard]] Rat rat_from(const Json& j);
[[nodiscard]] Json to_json(const Rat& r);
[[nodiscard]] Vec vec_from(const Json& j);
[[nodiscard]] Json to_json(const Vec& v);
[[nodiscard]] Vec parse_csv(const std::string& text);

[[nodiscard]] Tensor tensor_from(const Json& j);
[[nodiscard]] Json to_json(const Tensor& t);
[[nodiscard]] Json to_json(const ProjPoint& p);
[[nodiscard]] ProjPoint point_from(const Json& j);

// kinds: veronese, product_sv, standard_sv, product, quotient, image.
[[nodiscard]] FactorizationStructure structure_from(const Json& spec, std::uint64_t seed = 0);
[[nodiscard]] Json to_json(const FactorizationStructure& f);
[[nodiscard]] Json to_json(const AxiomReport& report);

[[nodiscard]] Json to_json(const Poly& p);
[[nodiscard]] Json to_json(const FactorizationCurve& c);
[[nodiscard]] FactorizationCurve curve_from(const Json& j);
[[nodiscard]] Json to_json(const DecompositionCertificate& cert);
[[nodiscard]] Json to_json(const Indecomposable& ind);

[[nodiscard]] std::vector<std::vector<Rat>> points_from(const Json& j);
[[nodiscard]] Json to_json(const Cone& cone);
[[nodiscard]] Json to_json(const FacetCertificate& f);
[[nodiscard]] FacetCertificate facet_from(const Json& j);
[[nodiscard]] Json to_json(const std::vector<FacetCertificate>& facets);
[[nodiscard]] Json to_json(const PolytopeSection& s);

[[nodiscard]] Json to_json(const Lattice& l);
[[nodiscard]] Json to_json(const DelzantVerdict& v);
[[nodiscard]] Json to_json(const RationalDelzantReport& r);

}  // namespace fstruct::io
