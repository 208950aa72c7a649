#ifndef SPLINEDIM_VERIFY_HPP
#define SPLINEDIM_VERIFY_HPP

#include <set>
#include <string>
#include <vector>

namespace splinedim {

/**
 * Options for the reproduction suite. Every computation is exact; the only
 * tunable is the exact-dense budget: grid cells whose linear systems exceed
 * max_columns columns are skipped and reported (never silently passed).
 * Budget 0 removes the cap and attempts the full grids regardless of cost.
 */
struct VerifyOptions {
  long max_columns = 2500;
  int jobs = 0;            // worker threads; 0 picks the hardware concurrency
  std::set<int> criteria;  // run only these ids when nonempty (1..10)
  int max_k = 0;           // skip sub-checks above this dimension when > 0
};

struct CriterionResult {
  int id = 0;
  std::string label;
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

/** Runs the full acceptance grid and returns per-criterion outcomes. */
VerifyReport run_paper_suite(const VerifyOptions& options = {});

/** One line per criterion plus a summary, as printed by the CLI. */
std::string format_report(const VerifyReport& report);

}  // namespace splinedim

#endif
