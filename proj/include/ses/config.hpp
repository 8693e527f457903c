#pragma once

#include <cstdint>

namespace ses {

// Enumeration cap shared by the projective/subspace scans.  Overridable via
// the SES_MAX_ENUM environment variable or set_max_enum().
std::uint64_t max_enum();
void set_max_enum(std::uint64_t cap);

// Largest field order accepted by FieldSpec construction.
constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

}  // namespace ses
