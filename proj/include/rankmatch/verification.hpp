#pragma once

#include <string>
#include <vector>

#include "rankmatch/events.hpp"
#include "rankmatch/graph.hpp"

namespace rankmatch {

struct CorpusEntry {
  std::string name;
  Graph graph;
  PerfectMatching matching;
};

// Fixed verification corpus: even paths and cycles up to six nodes, K4, K6,
// K_{3,3}, the smallest two-block hardness graph, and twenty seeded random
// graphs with planted perfect matchings on four and six nodes.
std::vector<CorpusEntry> verification_corpus();

struct CheckResult {
  std::string graph;
  std::string check;
  bool pass = false;
  std::string detail;
};

// Exact counting identities and structural properties, enumerated over all
// permutations of the entry's graph.
std::vector<CheckResult> run_exhaustive_checks(const CorpusEntry& entry,
                                               int cap = kDefaultEnumerationCap);

// Boundary relation properties (image size, rule injectivity, preimage
// bound, aggregate count inequality).
std::vector<CheckResult> run_boundary_checks(const CorpusEntry& entry,
                                             int cap = kDefaultEnumerationCap);

// Both suites over the whole corpus.
std::vector<CheckResult> run_full_verification(int cap = kDefaultEnumerationCap);

}  // namespace rankmatch
