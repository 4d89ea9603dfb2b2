#pragma once

#include <string>
#include <vector>

namespace rsslb {

struct GasQuery {
  double loss_db = 0.0;
  bool clamped = false;  // set when the query fell outside the table grid
};

class GasAttenuationProvider {
 public:
  virtual ~GasAttenuationProvider() = default;
  virtual GasQuery query(double f_ghz, double path_length_m) const = 0;

  double loss_db(double f_ghz, double path_length_m) const {
    return query(f_ghz, path_length_m).loss_db;
  }
};

class ZeroGasAttenuation final : public GasAttenuationProvider {
 public:
  GasQuery query(double, double) const override { return {0.0, false}; }
};

/// Bilinear lookup over a CSV grid: header row carries frequencies in GHz,
/// first column carries path lengths in km, cells are losses in dB. Queries
/// outside the grid clamp to the nearest edge and flag it.
class GasAttenuationTable final : public GasAttenuationProvider {
 public:
  static GasAttenuationTable from_csv_file(const std::string& path);
  static GasAttenuationTable from_csv_text(const std::string& text);

  GasQuery query(double f_ghz, double path_length_m) const override;

 private:
  std::vector<double> freqs_ghz_;
  std::vector<double> paths_km_;
  std::vector<std::vector<double>> loss_db_;  // [path][freq]
};

}  // namespace rsslb
