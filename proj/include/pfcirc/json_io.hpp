#pragma once

#include "pfcirc/circuit.hpp"
#include "pfcirc/skew.hpp"
#include "pfcirc/tensor.hpp"

#include "json.hpp"

namespace pfcirc {

// File formats (see docs/file-formats.md):
//   skew matrix: {"labels":[...], "upper":[[i,j,"scalar"],...]}  (labels)
//   tensor:      {"arity":n, "variance":"kkbb...", "coeffs":{"mask":"scalar"}}
//   circuit:     {"vertices":[{"side":...,"rotation":[...],"legs":[...]?,
//                 "assignment":{...}}], "edges":[[u,v],...]}
// Scalars are rendered exactly and parse back bit-identically.

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json skew_to_json(const SkewMatrix& m);
SkewMatrix skew_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const QubitTensor& t);
QubitTensor tensor_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json edge_order_to_json(const EdgeOrder& o);
EdgeOrder edge_order_from_json(const nlohmann::json& j);

}  // namespace pfcirc
