#pragma once

#include <json.hpp>

#include "skeinlab/tensor.hpp"

namespace skeinlab {

// {"rank": n, "dim": d, "entries": [[[i1,...,in], "p/q"], ...]}, entries in
// lexicographic tuple order.
nlohmann::json tensor_to_json(const SparseTensor& t);
SparseTensor tensor_from_json(const nlohmann::json& j);

}  // namespace skeinlab
