#include "rsslb/reflection.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "rsslb/constants.hpp"
#include "rsslb/geometry.hpp"

namespace rsslb {

const char* to_string(Paradigm p) {
  return p == Paradigm::Specular ? "specular" : "scattering";
}

Paradigm paradigm_from_string(const std::string& s) {
  if (s == "specular") return Paradigm::Specular;
  if (s == "scattering") return Paradigm::Scattering;
  throw std::invalid_argument("unknown paradigm '" + s + "' (expected specular|scattering)");
}

void LogDistanceParams::validate() const {
  if (!(tx_power_w > 0.0)) throw std::invalid_argument("log-distance: tx_power_w must be > 0");
  if (!(tx_gain > 0.0) || !(rx_gain > 0.0)) {
    throw std::invalid_argument("log-distance: antenna gains must be > 0");
  }
  if (!(wavelength_m > 0.0)) throw std::invalid_argument("log-distance: wavelength_m must be > 0");
  if (!(ref_distance_m > 0.0)) throw std::invalid_argument("log-distance: ref_distance_m must be > 0");
  if (!(path_loss_exp >= 2.0)) throw std::invalid_argument("log-distance: path_loss_exp must be >= 2");
}

double pr_specular_terrestrial(const LogDistanceParams& p, double half_span_m, std::int64_t n) {
  const double alpha = p.path_loss_exp;
  const double amp = p.wavelength_m / (4.0 * kPi);
  const double count = 1.0 + static_cast<double>(n);
  return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp *
         std::pow(p.ref_distance_m, alpha - 2.0) * count * count /
         std::pow(2.0 * half_span_m, alpha);
}

double pr_scattering_terrestrial(const LogDistanceParams& p, double d_t_m, double d_r_m,
                                 std::int64_t n) {
  const double alpha = p.path_loss_exp;
  const double amp = p.wavelength_m / (4.0 * kPi);
  const double count = static_cast<double>(n);
  return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp * amp * amp *
         std::pow(p.ref_distance_m, 2.0 * alpha - 4.0) * count * count /
         std::pow(d_t_m * d_r_m, alpha);
}

double pr_specular_aerial(const LogDistanceParams& p, double d_t_m, double d_r_m, std::int64_t n) {
  const double amp = p.wavelength_m / (4.0 * kPi);
  const double count = static_cast<double>(n);
  const double sum = d_t_m + d_r_m;
  return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp * count * count / (sum * sum);
}

double pr_scattering_aerial(const LogDistanceParams& p, double equivalent_distance_m2,
                            std::int64_t n) {
  const double amp = p.wavelength_m / (4.0 * kPi);
  const double count = static_cast<double>(n);
  return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp * amp * amp * count * count /
         (equivalent_distance_m2 * equivalent_distance_m2);
}

double pr_reflector_sum_oracle(const LogDistanceParams& p,
                               std::span<const ReflectorState> reflectors, Paradigm mode,
                               std::optional<double> direct_link_distance_m) {
  const double gamma = p.path_loss_exp / 2.0;
  const double d0 = p.ref_distance_m;
  std::complex<double> sum{0.0, 0.0};

  if (mode == Paradigm::Specular) {
    if (direct_link_distance_m) {
      sum += 1.0 / std::pow(*direct_link_distance_m, gamma);
    }
    for (const ReflectorState& r : reflectors) {
      const double net_phase = r.incident_phase_rad + r.applied_phase_rad;
      sum += r.reflection_loss * std::polar(1.0, -net_phase) /
             std::pow(r.tx_distance_m + r.rx_distance_m, gamma);
    }
    const double amp = p.wavelength_m * std::pow(d0, gamma - 1.0) / (4.0 * kPi);
    return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp * std::norm(sum);
  }

  // Scattering: cascaded per-reflector channels, coherently combined when
  // phi_i = theta_ti + theta_ir.
  for (const ReflectorState& r : reflectors) {
    const double net_phase = r.applied_phase_rad - r.tx_channel_phase_rad - r.rx_channel_phase_rad;
    sum += r.reflection_loss * std::polar(1.0, -net_phase) /
           std::pow(r.tx_distance_m * r.rx_distance_m, gamma);
  }
  const double amp = p.wavelength_m / (4.0 * kPi);
  return p.tx_power_w * p.tx_gain * p.rx_gain * amp * amp * amp * amp *
         std::pow(d0, 2.0 * p.path_loss_exp - 4.0) * std::norm(sum);
}

namespace {

double pr_max_common(const LogDistanceParams& p, double rss_area_m2,
                     const ReflectorUnitSpec& unit) {
  const double packing = rss_area_m2 / (unit.c1 * unit.c2);
  const double four_pi = 4.0 * kPi;
  return p.tx_power_w * p.tx_gain * p.rx_gain / (four_pi * four_pi * four_pi * four_pi) *
         packing * packing;
}

}  // namespace

double pr_max_scattering_terrestrial(const LogDistanceParams& p, double rss_area_m2,
                                     const ReflectorUnitSpec& unit, double d_t_m, double d_r_m) {
  return pr_max_common(p, rss_area_m2, unit) *
         std::pow(p.ref_distance_m, 2.0 * p.path_loss_exp - 4.0) /
         std::pow(d_t_m * d_r_m, p.path_loss_exp);
}

double pr_max_scattering_aerial(const LogDistanceParams& p, double rss_area_m2,
                                const ReflectorUnitSpec& unit, double altitude_m,
                                double half_span_m) {
  const double dsc = equivalent_distance_scattering_opt(altitude_m, half_span_m);
  return pr_max_common(p, rss_area_m2, unit) / (dsc * dsc);
}

}  // namespace rsslb
