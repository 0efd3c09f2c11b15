#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace limbforge {

// Outcome of one sweep. `pass` covers the invariants the sweep can judge by
// itself; `metrics` carries the counts a caller may hold against frozen
// values. `failures` lists offending inputs (graph6), at most a handful.
struct SweepReport {
  std::string name;
  bool pass = true;
  std::map<std::string, std::uint64_t> metrics;
  std::vector<std::string> failures;
  double seconds = 0;

  void fail(const std::string& what);
};

std::string report_to_json(const SweepReport& r);

// lrw_dh against lrw_oracle on every connected DH graph with <= max_n vertices.
SweepReport sweep_oracle_equivalence(std::size_t max_n);
// is_lrw_le_1 against the oracle on all connected graphs <= max_n, then one
// caterpillar-with-twins graph of caterpillar_n vertices within time_limit
// seconds.
SweepReport sweep_lrw1_recognition(std::size_t max_n, std::size_t caterpillar_n, double time_limit,
                                   std::uint64_t seed);
// lrw of K_n, net, gamma1, C5 and complete binary trees of height 2n+1.
SweepReport sweep_named_values();
// pw(T_D)/2 <= lrw_dh <= pw(T_D)+1 and the composed-layout bound.
SweepReport sweep_bounds(std::size_t count, std::size_t max_n, std::uint64_t seed);
// Certification of generate_phi(1) plus the DH fixtures' lrw and table rows.
SweepReport sweep_obstruction_certification();
// Some Psi_1 member as a vertex-minor of every connected DH graph <= max_n
// with lrw >= 2; scripts are replayed.
SweepReport sweep_mainobs(std::size_t max_n);
// Canonical decompositions of random connected graphs: origin round trip,
// canonicity, relabeling invariance, the DH and tree characterisations.
SweepReport sweep_canonicality(std::size_t count, std::size_t max_n, std::uint64_t seed);
// Extraction on (host, tree) pairs whose decomposition tree holds the
// embedding, plus to_subcubic on all trees <= subcubic_n vertices.
SweepReport sweep_extractor(std::size_t pairs, std::size_t subcubic_n, std::uint64_t seed);
// generate_phi(2) with a certified sample.
SweepReport sweep_phi2(std::size_t sample);
// Random DH graphs with pw(T_D) > lrw_dh, reported without judgment.
SweepReport sweep_pw_question(std::size_t count, std::size_t max_n, std::uint64_t seed);

}  // namespace limbforge
