#include "osaas/modem/curve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>

#include "osaas/core/errors.hpp"
#include "osaas/core/units.hpp"

namespace osaas {

using nlohmann::json;

namespace {

constexpr double kMonotoneStepDb = 0.01;

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CharacterizationCurve::CharacterizationCurve(std::string config_id, std::vector<CurvePoint> points,
                                             std::vector<double> coefficients)
    : config_id_(std::move(config_id)), points_(std::move(points)), coeffs_(std::move(coefficients)) {
    if (points_.size() < 2 || coeffs_.empty()) throw FitRejected(config_id_ + ": empty curve");
    for (size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i].gsnr_db > points_[i - 1].gsnr_db) || !(points_[i].q_db > points_[i - 1].q_db)) {
            throw FitRejected(config_id_ + ": characterization points are not monotone");
        }
    }
    double prev = eval(gsnr_min());
    const double range = gsnr_max() - gsnr_min();
    const int steps = std::max(1, static_cast<int>(std::ceil(range / kMonotoneStepDb - 1e-9)));
    for (int i = 1; i <= steps; ++i) {
        double g = gsnr_min() + range * i / steps;
        double q = eval(g);
        if (!(q > prev)) throw FitRejected(config_id_ + ": fitted polynomial not monotone near " + std::to_string(g) + " dB");
        prev = q;
    }
}

double CharacterizationCurve::eval(double gsnr_db) const { return horner(coeffs_, gsnr_db); }

double CharacterizationCurve::slope(double gsnr_db) const {
    double acc = 0.0;
    for (int k = degree(); k >= 1; --k) acc = acc * gsnr_db + k * coeffs_[k];
    return acc;
}

double CharacterizationCurve::residual_rms() const {
    double s = 0.0;
    for (const auto& p : points_) {
        double r = eval(p.gsnr_db) - p.q_db;
        s += r * r;
    }
    return std::sqrt(s / points_.size());
}

std::vector<double> characterization_grid(const PltConfig& config) {
    std::vector<double> grid;
    const double lo = config.required_gsnr_db - 1.0;
    for (int i = 0; i <= 26; ++i) {
        double g = lo + 0.5 * i;
        if (g >= 0.0 && g <= 40.0) grid.push_back(g);
    }
    return grid;
}

std::vector<CurvePoint> generate_char_points(const ModemModel& model, const PltConfig& config,
                                             const std::vector<double>& gsnr_grid, int degree) {
    for (size_t i = 0; i < gsnr_grid.size(); ++i) {
        if (gsnr_grid[i] < 0.0 || gsnr_grid[i] > 40.0) throw DomainError("characterization grid outside [0, 40] dB");
        if (i > 0 && !(gsnr_grid[i] > gsnr_grid[i - 1])) throw DomainError("characterization grid not ascending");
    }
    const double m = model.snr_modem_db(config);
    std::vector<CurvePoint> pts;
    for (double g : gsnr_grid) {
        const double ber = ber_from_snr(config.format, harmonic_db_sum({g, m}));
        if (!(ber > 0.0 && ber < 0.5)) continue;
        const double q = q_from_ber(ber);
        if (!pts.empty() && !(q > pts.back().q_db)) continue;
        pts.push_back({g, q});
    }
    if (static_cast<int>(pts.size()) < degree + 2) {
        throw InsufficientData(config.id() + ": " + std::to_string(pts.size()) + " usable points for degree " +
                               std::to_string(degree));
    }
    return pts;
}

CharacterizationCurve fit_characterization(const std::string& config_id, const std::vector<CurvePoint>& points,
                                           int degree) {
    if (degree < 1) throw DomainError("polynomial degree must be >= 1");
    if (static_cast<int>(points.size()) < degree + 2) {
        throw InsufficientData(config_id + ": need at least " + std::to_string(degree + 2) + " points");
    }
    // Fit on a centred, scaled axis, then expand back to powers of gsnr.
    const double lo = points.front().gsnr_db, hi = points.back().gsnr_db;
    const double c = 0.5 * (lo + hi);
    const double h = std::max(0.5 * (hi - lo), 1e-9);
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd a(n, degree + 1);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double t = (points[i].gsnr_db - c) / h, p = 1.0;
        for (int k = 0; k <= degree; ++k, p *= t) a(i, k) = p;
        y(i) = points[i].q_db;
    }
    Eigen::VectorXd b = a.colPivHouseholderQr().solve(y);
    std::vector<double> coeffs(degree + 1, 0.0);
    for (int k = 0; k <= degree; ++k) {
        // b_k ((g - c)/h)^k = b_k / h^k Σ_j C(k,j) g^j (-c)^(k-j)
        const double scale = b(k) / std::pow(h, k);
        for (int j = 0; j <= k; ++j) coeffs[j] += scale * binomial(k, j) * std::pow(-c, k - j);
    }
    CharacterizationCurve curve(config_id, points, std::move(coeffs));
    if (curve.residual_rms() > kMaxFitRmsDb) {
        throw FitRejected(config_id + ": residual RMS " + std::to_string(curve.residual_rms()) + " dB at degree " +
                          std::to_string(degree));
    }
    return curve;
}

double gsnr_from_q(const CharacterizationCurve& curve, double q_db) {
    double lo = curve.gsnr_min(), hi = curve.gsnr_max();
    if (!(q_db >= curve.q_min() - kImageEdgeToleranceDb && q_db <= curve.q_max() + kImageEdgeToleranceDb)) {
        throw OutOfRange(curve.config_id() + ": Q " + std::to_string(q_db) + " dB outside curve image");
    }
    q_db = std::clamp(q_db, curve.q_min(), curve.q_max());
    while (hi - lo > 1e-7) {
        double mid = 0.5 * (lo + hi);
        if (curve.eval(mid) < q_db) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

CharacterizationCurve characterize(const ModemModel& model, const PltConfig& config, int min_degree) {
    const auto grid = characterization_grid(config);
    std::string last_error = "no degree tried";
    for (int d = min_degree; d <= kMaxFitDegree; ++d) {
        try {
            auto pts = generate_char_points(model, config, grid, d);
            auto curve = fit_characterization(config.id(), pts, d);
            bool ok = true;
            for (const auto& p : pts) {
                const double q = std::clamp(p.q_db, curve.q_min(), curve.q_max());
                if (std::abs(gsnr_from_q(curve, q) - p.gsnr_db) > kRoundTripToleranceDb) {
                    ok = false;
                    break;
                }
            }
            if (ok) return curve;
            last_error = "round trip above tolerance at degree " + std::to_string(d);
        } catch (const FitRejected& e) {
            last_error = e.what();
        } catch (const OutOfRange& e) {
            last_error = e.what();
        }
    }
    throw FitRejected(config.id() + ": " + last_error);
}

CurveSet characterize_catalog(const ModemModel& model, const Catalog& catalog) {
    CurveSet out;
    for (const auto& c : catalog) out.emplace(c.id(), characterize(model, c));
    return out;
}

json to_json(const CharacterizationCurve& curve) {
    json pts = json::array();
    for (const auto& p : curve.points()) pts.push_back({p.gsnr_db, p.q_db});
    return json{{"config_id", curve.config_id()},
                {"degree", curve.degree()},
                {"coefficients", curve.coefficients()},
                {"valid_range", {curve.gsnr_min(), curve.gsnr_max()}},
                {"points", pts}};
}

CharacterizationCurve curve_from_json(const json& j) {
    try {
        std::vector<CurvePoint> pts;
        for (const auto& p : j.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        return CharacterizationCurve(j.at("config_id").get<std::string>(), std::move(pts),
                                     j.at("coefficients").get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed curve file: ") + e.what());
    }
}

std::filesystem::path curve_file_name(const std::string& config_id) { return config_id + ".json"; }

void save_curves(const CurveSet& curves, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [id, curve] : curves) {
        std::ofstream out(dir / curve_file_name(id));
        if (!out) throw ConfigError("cannot write curve for " + id);
        out << to_json(curve).dump(2) << '\n';
    }
}

CurveSet load_curves(const Catalog& catalog, const std::filesystem::path& dir) {
    CurveSet out;
    for (const auto& c : catalog) {
        auto path = dir / curve_file_name(c.id());
        std::ifstream in(path);
        if (!in) throw ConfigError("missing characterization curve " + path.string());
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
        auto curve = curve_from_json(j);
        if (curve.config_id() != c.id()) throw ConfigError(path.string() + ": curve belongs to " + curve.config_id());
        out.emplace(c.id(), std::move(curve));
    }
    return out;
}

}  // namespace osaas
