#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "rsslb/platform.hpp"

namespace rsslb {

enum class Paradigm { Specular, Scattering };

const char* to_string(Paradigm p);
Paradigm paradigm_from_string(const std::string& s);

/// Log-distance channel parameters. Powers and gains are linear (watts and
/// ratios); alpha = 2*gamma is the path-loss exponent.
struct LogDistanceParams {
  double tx_power_w = 10.0;
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double wavelength_m = 0.01;
  double ref_distance_m = 1.0;  // d0
  double path_loss_exp = 2.0;   // alpha

  void validate() const;
};

/// Per-reflector state for the summation oracle. Defaults describe an ideal
/// reflector: lossless, perfectly phase-aligned.
struct ReflectorState {
  double reflection_loss = 1.0;       // rho_i in [0, 1]
  double incident_phase_rad = 0.0;    // theta_i (specular)
  double applied_phase_rad = 0.0;     // phi_i
  double tx_distance_m = 1.0;         // d_ti
  double rx_distance_m = 1.0;         // d_ir
  double tx_channel_phase_rad = 0.0;  // theta_ti (scattering)
  double rx_channel_phase_rad = 0.0;  // theta_ir (scattering)
};

// Mirror regime, weak direct link included:
//   P_r = P_t G_t G_r (lambda/4pi)^2 d0^(alpha-2) (1+N)^2 / (2d)^alpha
double pr_specular_terrestrial(const LogDistanceParams& p, double half_span_m, std::int64_t n);

// Cascaded-channel regime:
//   P_r = P_t G_t G_r (lambda/4pi)^4 d0^(2alpha-4) N^2 / (d_t d_r)^alpha
double pr_scattering_terrestrial(const LogDistanceParams& p, double d_t_m, double d_r_m,
                                 std::int64_t n);

// Aerial free-space mirror (alpha pinned to 2, no direct link):
//   P_r = P_t G_t G_r (lambda/4pi)^2 N^2 / (d_t + d_r)^2
double pr_specular_aerial(const LogDistanceParams& p, double d_t_m, double d_r_m, std::int64_t n);

// Aerial cascade at an equivalent path-loss distance d_sc (m^2):
//   P_r = P_t G_t G_r (lambda/4pi)^4 N^2 / d_sc^2
double pr_scattering_aerial(const LogDistanceParams& p, double equivalent_distance_m2,
                            std::int64_t n);

/// Coherent per-reflector sum without the equal-distance / ideal-phase
/// simplifications. With ideal equal-distance reflectors it reproduces the
/// closed forms above. `direct_link_distance_m` adds the weak direct-path
/// term (specular mode only).
double pr_reflector_sum_oracle(const LogDistanceParams& p, std::span<const ReflectorState> reflectors,
                               Paradigm mode,
                               std::optional<double> direct_link_distance_m = std::nullopt);

// Received power at full surface packing, N = A_t / (c1 c2 lambda^2). The
// wavelength cancels exactly:
//   P_r = P_t G_t G_r / (4pi)^4 * (A_t / (c1 c2))^2 * d0^(2alpha-4) / (d_t d_r)^alpha
double pr_max_scattering_terrestrial(const LogDistanceParams& p, double rss_area_m2,
                                     const ReflectorUnitSpec& unit, double d_t_m, double d_r_m);

// Aerial variant at the optimal placement; the denominator is
// (H^2 + d^2)^2 for d <= H and (2 H d)^2 otherwise.
double pr_max_scattering_aerial(const LogDistanceParams& p, double rss_area_m2,
                                const ReflectorUnitSpec& unit, double altitude_m,
                                double half_span_m);

}  // namespace rsslb
