#include "sobolev/series_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace sobolev {

using nlohmann::json;

namespace {

constexpr const char* kSeriesFormat = "sobolev-embedding/sine-series";

double number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string("expected a number for ") + what);
  return j.get<double>();
}

}  // namespace

json interval_to_json(const Interval& x) { return json{{"lo", x.lo()}, {"hi", x.hi()}, {"rounding", "outward"}}; }

Interval interval_from_json(const json& j) {
  double lo = 0, hi = 0;
  if (j.is_array() && j.size() == 2) {
    lo = number(j[0], "interval lo");
    hi = number(j[1], "interval hi");
  } else if (j.is_object() && j.contains("lo") && j.contains("hi")) {
    lo = number(j["lo"], "interval lo");
    hi = number(j["hi"], "interval hi");
  } else {
    throw FormatError("malformed interval");
  }
  if (!(lo <= hi)) throw FormatError("interval with lo > hi");
  return Interval(lo, hi);
}

json series_to_json(const SineSeries2D& u) {
  json c = json::array();
  for (const auto& v : u.coeffs()) c.push_back(json::array({v.lo(), v.hi()}));
  return json{{"format", kSeriesFormat},
              {"version", 1},
              {"domain", json::array({u.domain().L1(), u.domain().L2()})},
              {"N", u.N()},
              {"coeffs", c}};
}

SineSeries2D series_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kSeriesFormat) throw FormatError("not a sine-series document");
  if (j.value("version", 0) != 1) throw FormatError("unsupported sine-series version");
  const auto& d = j.at("domain");
  if (!d.is_array() || d.size() != 2) throw FormatError("domain must be [L1, L2]");
  const DomainRect dom(number(d[0], "L1"), number(d[1], "L2"));
  const int n = j.at("N").get<int>();
  if (n < 1) throw FormatError("N must be positive");
  const auto& c = j.at("coeffs");
  if (!c.is_array() || c.size() != static_cast<std::size_t>(n) * n) throw FormatError("coefficient count must be N^2");
  SineSeries2D u(dom, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) u.a(i, k) = interval_from_json(c[static_cast<std::size_t>(i - 1) * n + (k - 1)]);
  return u;
}

void save_series(const SineSeries2D& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open " + path + " for writing");
  out << series_to_json(u).dump(1) << '\n';
  if (!out) throw IOError("write to " + path + " failed");
}

SineSeries2D load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return series_from_json(j);
}

std::uint64_t coefficient_digest(const SineSeries2D& u) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 0x100000001b3ULL;
    }
  };
  const double shape[3] = {u.domain().L1(), u.domain().L2(), static_cast<double>(u.N())};
  mix(shape, sizeof shape);
  for (const auto& v : u.coeffs()) {
    const double e[2] = {v.lo(), v.hi()};
    mix(e, sizeof e);
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string exact_decimal(double x) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace sobolev
