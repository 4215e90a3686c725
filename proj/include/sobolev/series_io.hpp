#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sobolev/interval.hpp"
#include "sobolev/sine_series.hpp"

namespace sobolev {

/// {"lo": .., "hi": .., "rounding": "outward"}
nlohmann::json interval_to_json(const Interval& x);
/// Accepts the object form above or a two-element array [lo, hi].
Interval interval_from_json(const nlohmann::json& j);

/// {"format": "sobolev-embedding/sine-series", "version": 1, "domain": [L1, L2],
///  "N": n, "coeffs": [[lo, hi], ...]} with coefficients row-major from a_11.
nlohmann::json series_to_json(const SineSeries2D& u);
SineSeries2D series_from_json(const nlohmann::json& j);

void save_series(const SineSeries2D& u, const std::string& path);
SineSeries2D load_series(const std::string& path);

/// FNV-1a over the endpoint bit patterns and the shape of the series.
std::uint64_t coefficient_digest(const SineSeries2D& u);
std::string hex64(std::uint64_t v);

/// Shortest decimal that reads back to the same double.
std::string exact_decimal(double x);

}  // namespace sobolev
