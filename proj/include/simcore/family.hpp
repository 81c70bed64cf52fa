#pragma once

#include <string>

namespace simcore {

/// Partition family selector.
///   BC: bar-cores (strict partitions with no bar length equal to the modulus)
///   CS: shifted diagrams with no shifted hook divisible by the modulus
///   DD: strict partitions whose doubling has no hook divisible by the modulus
///   SC: self-conjugate cores (closed-form counts and series only)
enum class Family { BC, CS, DD, SC };

const char* family_name(Family f);
Family family_from_name(const std::string& name); // "bc" | "cs" | "dd" | "sc"

} // namespace simcore
