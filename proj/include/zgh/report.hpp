#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zgh {

enum class Verdict { pass, fail };

/// One executed check. `witness` is non-empty exactly when the check failed
/// and names the first offending basis tuple / entry.
struct CheckResult {
  std::string id;
  std::string operands;
  Verdict verdict = Verdict::pass;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> entries;

  void add(std::string id, std::string operands, bool pass, std::string witness = "") {
    entries.push_back({std::move(id), std::move(operands), pass ? Verdict::pass : Verdict::fail,
                       pass ? std::string() : std::move(witness)});
  }
  void merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
  std::size_t pass_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.verdict == Verdict::pass;
    return n;
  }
  std::size_t fail_count() const { return entries.size() - pass_count(); }
  bool all_pass() const { return fail_count() == 0; }
  /// First failing entry formatted as "id (operands): witness", or "".
  std::string first_failure() const {
    for (const auto& e : entries)
      if (e.verdict == Verdict::fail) return e.id + " (" + e.operands + "): " + e.witness;
    return "";
  }
};

using DiagramReport = CheckResult;

}  // namespace zgh
