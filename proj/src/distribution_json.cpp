#include <string>

#include "json.hpp"
#include "vclass/distributions.hpp"
#include "vclass/errors.hpp"

namespace vclass {

using nlohmann::json;

DiscreteDistribution distribution_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("distribution must be a JSON object");
  if (const auto fmt = doc.find("format"); fmt != doc.end()) {
    if (!fmt->is_string() || fmt->get<std::string>() != kDistributionFormat) {
      throw DataError("unsupported distribution format tag");
    }
  }
  const auto atoms = doc.find("atoms");
  if (atoms == doc.end() || !atoms->is_array()) throw DataError("missing \"atoms\" array");

  std::vector<Atom> parsed;
  parsed.reserve(atoms->size());
  for (const json& entry : *atoms) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("p") ||
        !entry["x"].is_number() || !entry["p"].is_number()) {
      throw DataError("each atom must be an object with numeric \"x\" and \"p\"");
    }
    parsed.push_back({entry["x"].get<double>(), entry["p"].get<double>()});
  }
  try {
    return DiscreteDistribution(std::move(parsed));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

std::string distribution_to_json(const DiscreteDistribution& d, int indent) {
  json atoms = json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({{"x", a.x}, {"p", a.p}});
  json doc = {{"format", std::string(kDistributionFormat)}, {"atoms", std::move(atoms)}};
  return doc.dump(indent);
}

}  // namespace vclass
