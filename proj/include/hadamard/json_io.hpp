#ifndef HADAMARD_JSON_IO_HPP
#define HADAMARD_JSON_IO_HPP

#include <json.hpp>

#include "hadamard/local_dirichlet.hpp"
#include "hadamard/series.hpp"

namespace hadamard {

// Series travel as JSON arrays of [re, im] pairs indexed from 0.  A bare
// number is accepted as a real coefficient on input.
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const CoefficientSeries& f);
Complex complex_from_json(const nlohmann::json& j);
CoefficientSeries series_from_json(const nlohmann::json& j);

// Atoms travel as [{"zeta": [re, im], "mass": m}, ...].
nlohmann::json to_json(const AtomicWeightMeasure& mu);
AtomicWeightMeasure measure_from_json(const nlohmann::json& j);

}  // namespace hadamard

#endif  // HADAMARD_JSON_IO_HPP
