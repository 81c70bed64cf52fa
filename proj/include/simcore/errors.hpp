#pragma once

#include <stdexcept>
#include <string>

namespace simcore {

/// A hypothesis required by a formula or construction is violated
/// (non-coprime moduli, wrong parity, bad diagram dimensions, ...).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// An input lies outside the domain of a bijection (not a member of the
/// family, malformed path, ...).  The message names the violated clause.
struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two independent computations failed.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace simcore
