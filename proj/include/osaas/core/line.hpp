#pragma once

#include "osaas/core/types.hpp"

namespace osaas {

struct BerReading {
    double pre_fec_ber = 0.5;
    bool post_fec_ok = false;
    double rx_power_dbm = 0.0;
};

// Black-box boundary of a line: configure one carrier, read the receiver.
// A line is an exclusive resource; one carrier is configured at a time.
class ProbeLine {
public:
    virtual ~ProbeLine() = default;

    virtual const MediaChannel& media_channel() const = 0;

    // May throw CarrierRejected or LimitViolation.
    virtual BerReading probe(const PltConfig& config, const PowerPolicy& policy, double carrier_thz,
                             double sim_time_h) = 0;
};

}  // namespace osaas
