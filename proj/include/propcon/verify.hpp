#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "propcon/graph.hpp"

namespace propcon {

// Claims the harness can replay over a corpus. Hypothesis/conclusion per tag:
//   prop11                -- pc=1 iff complete; trees pc=Delta (n>=2); stars
//                            pc=m; traceable pc<=2
//   thm2-bridgeless       -- bridgeless => pc <= 3
//   thm3-gstar            -- pc <= max(3, Delta(G*))
//   thm-gnk               -- |E| >= C(n-k-1,2)+k+2 => pc <= k
//                            (k=2 exceptions: g-star-1 at n=5, g-star-2 at n=6)
//   lemma-bridge-bound    -- |E| <= refined bridge bound (and the simple one)
//   thm-main-k3           -- |E| >= main threshold(n,k,delta) => pc <= k, k>=3
//   thm-small-order       -- noncomplete, delta>=2, 5<=n<=8 => pc = 2
//                            (exceptions: g-1 at n=7, g-n at n=8)
//   thm-k2-d2             -- n>=6, delta=2, |E| >= C(n-5,2)+7 => pc <= 2
//                            (exceptions: g-1 at n=7, g-n at n>=8)
//   remark-quarter-degree -- noncomplete, n>=9, delta >= n/4 => pc = 2
//   woodall-eg-soundness  -- size-vs-circumference facts hold for the profile
//   conjecture-k2         -- delta>=3, |E| >= conjecture threshold => pc <= 2
enum class TheoremTag {
  prop11,
  thm2_bridgeless,
  thm3_gstar,
  thm_gnk,
  lemma_bridge_bound,
  thm_main_k3,
  thm_small_order,
  thm_k2_d2,
  remark_quarter_degree,
  woodall_eg_soundness,
  conjecture_k2,
};

std::string theorem_tag_name(TheoremTag t);
TheoremTag parse_theorem_tag(const std::string& name);

struct VerifyTask {
  TheoremTag theorem = TheoremTag::thm3_gstar;
  int n = 0;
  std::string source = "builtin";  // "builtin" or a graph6 file path ("-" = stdin via CLI)
  int k = 2;                       // thm-gnk (k >= 2) and thm-main-k3 (k >= 3)
  std::optional<int> min_degree, min_size, exact_bridges;  // record filters
  bool widen_delta = false;        // thm-k2-d2: accept delta >= 2 instead of = 2
  int jobs = 1;                    // graphs evaluated in parallel when > 1
};

struct GraphRecord {
  std::string graph6;
  int n = 0, m = 0, delta = 0, bridges = 0;
  std::optional<int> pc;  // value when computed; see undecided
  bool pc_evaluated = false;
  bool undecided = false;  // pc was needed but the exact search regime was exceeded
  std::optional<long long> threshold;
  bool predicted = false;            // the theorem's hypothesis holds here
  std::optional<bool> observed;      // the conclusion, where evaluated
  bool violation = false;            // predicted, refuted, and not an expected exception
  bool exception = false;            // predicted, refuted, matches the expected exception set
  int exception_index = -1;          // which expected exception (internal)
  bool abstract_predicted = false;   // thm-main-k3 only: the dual delta=1 reading
};

struct VerifySummary {
  std::string task;
  int n = 0;
  std::string source;
  long long scanned = 0;             // every graph read from the source
  long long records = 0;             // graphs surviving the task filters
  long long hypothesis_matched = 0;
  long long violations = 0;
  long long undecided = 0;
  long long exception_matches = 0;
  long long expected_exceptions = 0;
  bool exceptions_match_expected = true;  // violator set equals the expected exception set
  bool exhaustive = true;                 // no undecided records
  long long abstract_matched = 0, abstract_violations = 0;  // thm-main-k3 only
  double wall_ms = 0;
};

struct VerifyReport {
  std::vector<GraphRecord> records;
  VerifySummary summary;
};

VerifyReport run_verification(const VerifyTask& task);

// Conjecture probe: scan order-n graphs with min degree >= delta (>= 3) whose
// size clears the conjecture threshold and report any with pc > 2.
VerifyReport search_counterexamples(int n, int delta, const std::string& source = "builtin", int jobs = 1);

// Seeded spot check of monotonicity under spanning subgraphs: deleting a
// random non-bridge edge never lowers pc.
VerifyReport check_monotonicity(long long samples, std::uint64_t seed);

// One JSON object per record, then one summary object.
void write_jsonl(const VerifyReport& r, std::ostream& out);
// Flat projection: graph6,n,m,delta,bridges,pc,predicted,observed,violation.
void write_csv(const VerifyReport& r, std::ostream& out);

}  // namespace propcon
