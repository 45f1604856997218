#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "osaas/core/catalog.hpp"
#include "osaas/modem/ber.hpp"

namespace osaas {

struct CurvePoint {
    double gsnr_db;
    double q_db;
};

class CharacterizationCurve {
public:
    CharacterizationCurve() = default;
    // Checks monotonicity of points and polynomial; throws FitRejected.
    CharacterizationCurve(std::string config_id, std::vector<CurvePoint> points, std::vector<double> coefficients);

    const std::string& config_id() const { return config_id_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    // Ascending powers of gsnr (dB).
    const std::vector<double>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double gsnr_min() const { return points_.front().gsnr_db; }
    double gsnr_max() const { return points_.back().gsnr_db; }
    double q_min() const { return eval(gsnr_min()); }
    double q_max() const { return eval(gsnr_max()); }

    double eval(double gsnr_db) const;
    double slope(double gsnr_db) const;
    double residual_rms() const;

private:
    std::string config_id_;
    std::vector<CurvePoint> points_;
    std::vector<double> coeffs_;
};

// 0.5 dB steps over [required − 1, required + 12] dB, clipped to [0, 40].
std::vector<double> characterization_grid(const PltConfig& config);

// Back-to-back Q at each grid GSNR with modem noise added via the harmonic sum.
// Points whose BER cannot be measured are dropped.
std::vector<CurvePoint> generate_char_points(const ModemModel& model, const PltConfig& config,
                                             const std::vector<double>& gsnr_grid, int degree = 3);

inline constexpr double kMaxFitRmsDb = 0.05;

CharacterizationCurve fit_characterization(const std::string& config_id, const std::vector<CurvePoint>& points,
                                           int degree);

// Readings this close outside the image sit within the fit residual and map to the edge.
inline constexpr double kImageEdgeToleranceDb = 0.005;

// Inverts the fitted polynomial by bisection. Throws OutOfRange outside the curve image.
double gsnr_from_q(const CharacterizationCurve& curve, double q_db);

inline constexpr int kDefaultFitDegree = 3;
inline constexpr int kMaxFitDegree = 8;
// Largest inversion error tolerated at the characterization points.
inline constexpr double kRoundTripToleranceDb = 0.005;

// Fits the smallest degree (starting at `min_degree`) that is monotone and
// inverts every characterization point within kRoundTripToleranceDb.
CharacterizationCurve characterize(const ModemModel& model, const PltConfig& config,
                                   int min_degree = kDefaultFitDegree);

using CurveSet = std::map<std::string, CharacterizationCurve>;

CurveSet characterize_catalog(const ModemModel& model, const Catalog& catalog);

nlohmann::json to_json(const CharacterizationCurve& curve);
CharacterizationCurve curve_from_json(const nlohmann::json& j);

std::filesystem::path curve_file_name(const std::string& config_id);
void save_curves(const CurveSet& curves, const std::filesystem::path& dir);
// Throws ConfigError if any catalog config has no curve file.
CurveSet load_curves(const Catalog& catalog, const std::filesystem::path& dir);

}  // namespace osaas
