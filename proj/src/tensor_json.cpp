#include "skeinlab/tensor_json.hpp"

#include "skeinlab/error.hpp"

namespace skeinlab {

nlohmann::json tensor_to_json(const SparseTensor& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [tuple, value] : t.entries()) {
    entries.push_back(nlohmann::json::array({tuple, to_string(value)}));
  }
  return {{"rank", t.rank()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

SparseTensor tensor_from_json(const nlohmann::json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    const auto dim = j.at("dim").get<std::size_t>();
    SparseTensor t(rank, dim);
    for (const auto& entry : j.at("entries")) {
      if (!entry.is_array() || entry.size() != 2) throw InvalidArgument("tensor entry must be [tuple, value]");
      auto tuple = entry[0].get<IndexTuple>();
      const auto& raw = entry[1];
      Rational value = raw.is_string() ? parse_rational(raw.get<std::string>()) : Rational(raw.get<long>());
      if (t.entries().contains(tuple)) throw InvalidArgument("duplicate tensor entry");
      t.add(std::move(tuple), value);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed tensor JSON: ") + e.what());
  }
}

}  // namespace skeinlab
