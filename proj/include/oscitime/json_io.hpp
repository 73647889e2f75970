#pragma once

#include <json.hpp>

#include "oscitime/matrices.hpp"
#include "oscitime/phase_function.hpp"

namespace oscitime {

// {"terms": [{"degree": d, "harmonics": [{"k": k, "re": x, "im": y}, ...]}, ...]}
// with degrees ascending and harmonics ascending by k.
nlohmann::ordered_json to_json(const PhasePolyFourier& f);
PhasePolyFourier phase_poly_from_json(const nlohmann::ordered_json& j);

// {"label": s, "hbar": x, "omega": y, "window": {"n_min": a, "n_max": b},
//  "entries": [[{"re": x, "im": y}, ...], ...]} row-major by m ascending.
nlohmann::ordered_json to_json(const OperatorMatrix& matrix);
OperatorMatrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace oscitime
