// The acceptance suite: every criterion re-derived from scratch.

#ifndef MFACES_REPRO_HPP
#define MFACES_REPRO_HPP

#include <optional>
#include <string>
#include <vector>

namespace mfaces {

enum class Status { Pass, Fail, Skipped };

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
};

struct ReproOptions {
  std::optional<std::string> data_dir;  // directory holding Lutz-format files
};

struct LutzRow {
  const char* name;
  int k;             // m_k of a vertex link is compared
  long long value;   // published m_k(lk v)
};

/// Published vertex-link values for the named vertex-transitive spheres.
const std::vector<LutzRow>& lutz_table();

std::vector<CriterionResult> run_acceptance(const ReproOptions& opt = {});

/// Runs only the criterion with the given id (1..13).
CriterionResult run_criterion(int id, const ReproOptions& opt = {});

std::string to_string(Status s);

/// "criterion <id> <PASS|FAIL|SKIPPED> <name>: <detail>"
std::string render_line(const CriterionResult& r);

}  // namespace mfaces

#endif  // MFACES_REPRO_HPP
