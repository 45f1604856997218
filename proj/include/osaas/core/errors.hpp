#pragma once

#include <stdexcept>
#include <string>

namespace osaas {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (e.g. dB of a non-positive ratio).
struct DomainError : Error { using Error::Error; };

// Power policy exceeds the media channel budget.
struct LimitViolation : Error { using Error::Error; };

// Carrier does not fit inside the media channel.
struct CarrierRejected : Error { using Error::Error; };

struct InsufficientData : Error { using Error::Error; };

struct FitRejected : Error { using Error::Error; };

// Value outside the image of a characterization curve.
struct OutOfRange : Error { using Error::Error; };

// No working measurement to derive an estimate from.
struct NoSignal : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

struct ScenarioError : Error { using Error::Error; };

}  // namespace osaas
