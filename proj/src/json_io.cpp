#include "hadamard/json_io.hpp"

#include <stdexcept>

namespace hadamard {

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const CoefficientSeries& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("expected a number or a [re, im] pair, got " + j.dump());
}

CoefficientSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be a JSON array of [re, im] pairs");
  std::vector<Complex> c;
  c.reserve(j.size());
  for (const auto& item : j) c.push_back(complex_from_json(item));
  return CoefficientSeries(std::move(c));
}

nlohmann::json to_json(const AtomicWeightMeasure& mu) {
  auto out = nlohmann::json::array();
  for (const auto& atom : mu.atoms()) out.push_back({{"zeta", to_json(atom.point.zeta())}, {"mass", atom.mass}});
  return out;
}

AtomicWeightMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("atoms must be a JSON array of {\"zeta\", \"mass\"} objects");
  std::vector<AtomicWeightMeasure::Atom> atoms;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("zeta"))
      throw std::invalid_argument("atom entries need a \"zeta\" field: " + item.dump());
    const double mass = item.value("mass", 1.0);
    atoms.push_back({LocalPoint(complex_from_json(item.at("zeta"))), mass});
  }
  return AtomicWeightMeasure(std::move(atoms));
}

}  // namespace hadamard
