#pragma once

#include <cstddef>
#include <string>

namespace limbforge {

// Search and enumeration limits. Defaults can be overridden through the
// LIMBFORGE_CAPS environment variable, a comma list of key=value pairs,
// e.g. "oracle=14,orbit=10".
struct Caps {
  std::size_t oracle_n = 12;          // lrw_oracle vertex cap
  std::size_t orbit_n = 9;            // lc_orbit vertex cap
  std::size_t orbit_size = 200000;    // lc_orbit member cap
  std::size_t vm_states = 2000000;    // has_vertex_minor visited-state cap
  std::size_t extension_n = 14;       // one-vertex extension enumeration cap
  std::size_t pw_brute_n = 9;         // brute-force path-width cap
  std::size_t bag_orbit_states = 200000;  // extractor per-bag search cap
  std::size_t catalog_members = 200000;   // Δ members materialised per catalog
};

// Parses a LIMBFORGE_CAPS-style string over the defaults. Unknown keys or
// malformed values throw InvalidArgument.
Caps parse_caps(const std::string& spec);

// Process-wide caps: defaults overridden by LIMBFORGE_CAPS when set.
const Caps& caps();

// Replaces the process-wide caps (CLI and tests).
void set_caps(const Caps& c);

}  // namespace limbforge
