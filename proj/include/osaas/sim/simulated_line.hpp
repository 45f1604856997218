#pragma once

#include <mutex>
#include <random>
#include <vector>

#include "osaas/core/line.hpp"
#include "osaas/modem/ber.hpp"
#include "osaas/sim/link.hpp"

namespace osaas::sim {

struct SnrBreakdown {
    double launch_dbm;
    double snr_ase_db;
    double snr_nli_db;
    double filtering_penalty_db;
    double spectral_offset_db;
    double diurnal_offset_db;
    // ASE and NLI combined, then penalty and offsets applied.
    double line_gsnr_db;
};

// GSNR offset from tilt and ripple after equalization, at `offset_ghz` from the MC centre.
double spectral_offset(const LinkSpec& link, double offset_ghz);

double diurnal_offset(const LinkSpec& link, double sim_time_h);

// Throws CarrierRejected or LimitViolation.
SnrBreakdown line_snr(const LinkSpec& link, const PltConfig& config, const PowerPolicy& policy, double carrier_thz,
                      double sim_time_h);

// Noise-free receiver reading for a transceiver with `modem` implementation noise.
BerReading probe_response(const LinkSpec& link, const ModemModel& modem, const PltConfig& config,
                          const PowerPolicy& policy, double carrier_thz, double sim_time_h);

// GSNR a probe characterized with `char_modem` should report when the probing
// transceiver carries `probe_modem`. Test oracle only.
double ground_truth_gsnr(const LinkSpec& link, const PltConfig& config, double carrier_thz, const PowerPolicy& policy,
                         double sim_time_h, const ModemModel& probe_modem, const ModemModel& char_modem);

// A simulated line behind the black-box probe interface, with seeded Q noise.
class SimulatedLine : public ProbeLine {
public:
    SimulatedLine(LinkSpec link, ModemModel modem);

    const MediaChannel& media_channel() const override { return link_.media_channel; }
    BerReading probe(const PltConfig& config, const PowerPolicy& policy, double carrier_thz,
                     double sim_time_h) override;

    void reseed(std::uint64_t seed);
    void set_noise(double sigma_db) { sigma_db_ = sigma_db; }
    const LinkSpec& link() const { return link_; }

private:
    LinkSpec link_;
    ModemModel modem_;
    double sigma_db_;
    std::mt19937_64 rng_;
    std::mutex mutex_;
};

}  // namespace osaas::sim
