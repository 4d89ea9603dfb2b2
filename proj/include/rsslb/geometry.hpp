#pragma once

#include <cstdint>
#include <vector>

#include "rsslb/platform.hpp"

namespace rsslb {

/// Collinear reduction of the deployment geometry: Tx and Rx separated by
/// d_l = 2d on the ground, platform at altitude H_RSS, horizontally offset
/// from the Tx by r in [0, 2d]. Full 3-D inputs are normalized into this
/// frame at ingestion.
struct LinkGeometry {
  double altitude_m = 0.0;    // H_RSS
  double half_span_m = 0.0;   // d
  double tx_offset_m = 0.0;   // r
  double tx_height_m = 25.0;  // H_Tx
  double rx_height_m = 1.5;   // H_Rx

  void validate() const;
};

struct EndpointDistances {
  double tx_m;  // d_t = sqrt(H^2 + r^2)
  double rx_m;  // d_r = sqrt(H^2 + (2d - r)^2)
};

EndpointDistances endpoint_distances(const LinkGeometry& geom);

/// Elevation angle of the platform seen from a ground terminal, in degrees.
/// horizontal = 0 gives the zenith (90 deg).
double elevation_angle_deg(double altitude_m, double horizontal_m);

/// d_lim = 2 * A_t / lambda, the largest platform-to-endpoint distance at
/// which the surface still acts as a mirror.
double specular_limit_distance_m(double rss_area_m2, double wavelength_m);

/// N_min = ceil(D / (200 * lambda)) for 10-lambda units, D the binding
/// endpoint distance.
std::int64_t n_min_specular(double max_endpoint_distance_m, double wavelength_m);

/// N_max = floor(A_t / (c1 * c2 * lambda^2)), the count the reserved area can
/// physically host.
std::int64_t n_max(double rss_area_m2, const ReflectorUnitSpec& unit, double wavelength_m);

/// r* = d: the platform sits over the perpendicular bisector of Tx-Rx.
double optimal_placement_specular(double altitude_m, double half_span_m);

/// Roots of d(d_sc^2)/dr = 0 that minimize d_t * d_r: {d -+ sqrt(d^2 - H^2)}
/// when d >= H, otherwise the midpoint {d}.
std::vector<double> optimal_placement_scattering(double altitude_m, double half_span_m);

/// Equivalent path-loss distance d*_sc (units of m^2): H^2 + d^2 when
/// d <= H, else 2*H*d.
double equivalent_distance_scattering_opt(double altitude_m, double half_span_m);

}  // namespace rsslb
