#include "oscitime/json_io.hpp"

namespace oscitime {

using nlohmann::ordered_json;

ordered_json to_json(const PhasePolyFourier& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [d, series] : f.terms()) {
    ordered_json harmonics = ordered_json::array();
    for (const auto& [k, c] : series.coeffs())
      harmonics.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    terms.push_back({{"degree", d}, {"harmonics", std::move(harmonics)}});
  }
  return {{"terms", std::move(terms)}};
}

PhasePolyFourier phase_poly_from_json(const ordered_json& j) {
  PhasePolyFourier::Terms terms;
  for (const auto& term : j.at("terms")) {
    FourierSeries::Coeffs coeffs;
    for (const auto& h : term.at("harmonics"))
      coeffs[h.at("k").get<int>()] = {h.at("re").get<double>(), h.at("im").get<double>()};
    terms.emplace(term.at("degree").get<int>(), FourierSeries::from_coeffs(std::move(coeffs)));
  }
  return PhasePolyFourier::from_terms(std::move(terms));
}

ordered_json to_json(const OperatorMatrix& matrix) {
  const auto& w = matrix.window();
  ordered_json rows = ordered_json::array();
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    ordered_json row = ordered_json::array();
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      const Complex v = matrix.at(m, n);
      row.push_back({{"re", v.real()}, {"im", v.imag()}});
    }
    rows.push_back(std::move(row));
  }
  return {{"label", matrix.label()},
          {"hbar", matrix.constants().hbar()},
          {"omega", matrix.constants().omega()},
          {"window", {{"n_min", w.n_min()}, {"n_max", w.n_max()}}},
          {"entries", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const ordered_json& j) {
  const FockWindow w{j.at("window").at("n_min").get<int>(), j.at("window").at("n_max").get<int>(),
                     true};
  const PhysicalConstants c{j.at("hbar").get<double>(), j.at("omega").get<double>()};
  OperatorMatrix matrix{w, c, j.at("label").get<std::string>()};
  const auto& rows = j.at("entries");
  if (rows.size() != w.size()) throw std::invalid_argument("entry rows do not match window");
  for (int m = w.n_min(); m <= w.n_max(); ++m) {
    const auto& row = rows.at(static_cast<std::size_t>(m - w.n_min()));
    if (row.size() != w.size()) throw std::invalid_argument("entry row width does not match window");
    for (int n = w.n_min(); n <= w.n_max(); ++n) {
      const auto& cell = row.at(static_cast<std::size_t>(n - w.n_min()));
      matrix.at(m, n) = {cell.at("re").get<double>(), cell.at("im").get<double>()};
    }
  }
  return matrix;
}

}  // namespace oscitime
