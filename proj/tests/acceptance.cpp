// One PASS/FAIL line per acceptance criterion. Each sweep judges its own
// invariants; the frozen counts below were computed once by independent
// oracles and catch silent changes in enumeration or generation.
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "limbforge/experiments.hpp"

using namespace limbforge;

namespace {

using Frozen = std::map<std::string, std::uint64_t>;

struct Tally {
  int failed = 0;

  void report(int number, const SweepReport& r, const Frozen& frozen, const std::string& extra_failure = "") {
    std::ostringstream why;
    bool pass = r.pass && extra_failure.empty();
    for (const auto& f : r.failures) why << " failure=" << f;
    for (const auto& [key, want] : frozen) {
      const auto it = r.metrics.find(key);
      const std::uint64_t got = it == r.metrics.end() ? 0 : it->second;
      if (got != want) {
        pass = false;
        why << " " << key << "=" << got << "(expected " << want << ")";
      }
    }
    if (!extra_failure.empty()) why << " " << extra_failure;
    std::ostringstream metrics;
    for (const auto& [key, value] : r.metrics) metrics << " " << key << "=" << value;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " " << r.name << " (" << r.seconds << " s)"
              << metrics.str() << why.str() << std::endl;
    failed += pass ? 0 : 1;
  }
};

}  // namespace

int main() {
  Tally t;

  // Connected DH graphs per vertex count, n = 1..8.
  t.report(1, sweep_oracle_equivalence(8),
           {{"graphs", 1893}, {"graphs_n1", 1}, {"graphs_n2", 1}, {"graphs_n3", 2}, {"graphs_n4", 6},
            {"graphs_n5", 18}, {"graphs_n6", 73}, {"graphs_n7", 308}, {"graphs_n8", 1484}});

  // Connected graphs with at most 7 vertices: 1+1+2+6+21+112+853.
  t.report(2, sweep_lrw1_recognition(7, 100000, 30.0, 1), {{"graphs", 996}, {"caterpillar_vertices", 100000}});

  t.report(3, sweep_named_values(), {{"checks", 33}});

  {
    const SweepReport r = sweep_bounds(500, 40, 1);
    t.report(4, r, {{"graphs", 500}});
  }

  t.report(5, sweep_obstruction_certification(), {{"phi1_members", 10}, {"fixtures", 14}});

  t.report(6, sweep_mainobs(8), {{"psi1_members", 660}, {"wide_graphs", 776}, {"failures", 0}});

  t.report(7, sweep_canonicality(500, 10, 1), {{"graphs", 500}});

  t.report(8, sweep_extractor(50, 9, 1), {{"pairs", 50}, {"subcubic_trees", 95}});

  {
    const SweepReport r = sweep_phi2(128);
    const auto checked = r.metrics.count("members_checked") ? r.metrics.at("members_checked") : 0;
    t.report(9, r,
             {{"combinations", 607880}, {"pieces_complete", 104}, {"pieces_center", 76}, {"pieces_leaf", 104}},
             checked >= 100 ? "" : "fewer than 100 members certified");
  }

  std::cout << (t.failed == 0 ? "all criteria passed" : std::to_string(t.failed) + " criteria failed") << std::endl;
  return t.failed == 0 ? 0 : 1;
}
