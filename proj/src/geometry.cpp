#include "rsslb/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "rsslb/constants.hpp"

namespace rsslb {

namespace {

// Snap ratios that are within 1e-9 relative of an integer before applying
// ceil/floor. lambda = c/f is not exactly representable, so exact counts like
// A_t/(c1*c2*lambda^2) = 5000 otherwise land at 4999.999... and misfloor.
double snap_to_integer(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(nearest))) {
    return nearest;
  }
  return x;
}

}  // namespace

void LinkGeometry::validate() const {
  if (!(altitude_m >= 0.0)) throw std::invalid_argument("geometry: altitude_m must be >= 0");
  if (!(half_span_m > 0.0)) throw std::invalid_argument("geometry: half_span_m must be > 0");
  if (tx_offset_m < 0.0 || tx_offset_m > 2.0 * half_span_m) {
    throw std::invalid_argument("geometry: tx_offset_m must lie in [0, 2*half_span_m]");
  }
}

EndpointDistances endpoint_distances(const LinkGeometry& geom) {
  const double h = geom.altitude_m;
  const double far_offset = 2.0 * geom.half_span_m - geom.tx_offset_m;
  return {std::hypot(h, geom.tx_offset_m), std::hypot(h, far_offset)};
}

double elevation_angle_deg(double altitude_m, double horizontal_m) {
  if (horizontal_m <= 0.0) return 90.0;
  return rad2deg(std::atan(altitude_m / horizontal_m));
}

double specular_limit_distance_m(double rss_area_m2, double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw std::domain_error("specular_limit_distance: wavelength must be > 0");
  return 2.0 * rss_area_m2 / wavelength_m;
}

std::int64_t n_min_specular(double max_endpoint_distance_m, double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw std::domain_error("n_min_specular: wavelength must be > 0");
  const double ratio = snap_to_integer(max_endpoint_distance_m / (200.0 * wavelength_m));
  return static_cast<std::int64_t>(std::ceil(ratio));
}

std::int64_t n_max(double rss_area_m2, const ReflectorUnitSpec& unit, double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw std::domain_error("n_max: wavelength must be > 0");
  const double ratio = snap_to_integer(rss_area_m2 / unit.unit_area_m2(wavelength_m));
  return static_cast<std::int64_t>(std::floor(ratio));
}

double optimal_placement_specular(double /*altitude_m*/, double half_span_m) {
  return half_span_m;
}

std::vector<double> optimal_placement_scattering(double altitude_m, double half_span_m) {
  const double h = altitude_m;
  const double d = half_span_m;
  if (d < h) return {d};
  const double off = std::sqrt(d * d - h * h);
  if (off == 0.0) return {d};  // double root collapses at d == H
  return {d - off, d + off};
}

double equivalent_distance_scattering_opt(double altitude_m, double half_span_m) {
  const double h = altitude_m;
  const double d = half_span_m;
  if (d <= h) return h * h + d * d;
  return 2.0 * h * d;
}

}  // namespace rsslb
