#pragma once

#include <string>

namespace rsslb {

enum class EnvironmentKind { DenseUrban, Urban, Rural };

const char* to_string(EnvironmentKind k);
EnvironmentKind environment_kind_from_string(const std::string& s);

struct EnvironmentClass {
  EnvironmentKind kind = EnvironmentKind::Urban;
  // Ionospheric scintillation is active only for |latitude| <= 20 deg; the
  // default scenario sits outside that band.
  double latitude_deg = 45.0;

  void validate() const;
};

/// P_LoS fit coefficients for HAPS/LEO links, P = (b1 * theta^b2 + b3) / 100.
struct LosFitCoefficients {
  double b1, b2, b3;
};

LosFitCoefficients ntn_los_fit(EnvironmentKind kind);

/// Ka-band average clutter loss and shadow-fading standard deviations.
struct ClutterShadowEntry {
  double cl_nlos_db;
  double sigma_los_db;
  double sigma_nlos_db;
};

ClutterShadowEntry ntn_clutter_shadow(EnvironmentKind kind);

}  // namespace rsslb
