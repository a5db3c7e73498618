#ifndef DBLKIT_REPORT_HPP
#define DBLKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dblkit {

// exhaustive: every tuple of the finite closed tables was visited.
// probe: only tuples drawn from a declared probe set (or whose required table
// entries exist) were visited; absence of a counterexample is evidence, not proof.
enum class check_mode { exhaustive, probe };

inline const char* check_mode_name(check_mode m) {
  return m == check_mode::exhaustive ? "exhaustive" : "probe";
}

// Result of checking one named law. `witness` holds the ids of the first
// failing tuple in a law-specific layout so the same per-tuple predicate can be
// re-run on it (see the replay entry points of each checker); `detail` is the
// human-readable rendering of that tuple.
struct law_result {
  std::string law;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<long long> witness;
  std::string detail;
};

struct law_report {
  check_mode mode = check_mode::exhaustive;
  std::string artifact;  // what was checked, e.g. "fincat:two" or "double:span(base)"
  std::vector<law_result> laws;

  bool ok() const {
    for (const auto& r : laws)
      if (!r.passed) return false;
    return true;
  }
  const law_result* find(std::string_view name) const {
    for (const auto& r : laws)
      if (r.law == name) return &r;
    return nullptr;
  }
  std::uint64_t total_checked() const {
    std::uint64_t n = 0;
    for (const auto& r : laws) n += r.checked;
    return n;
  }
};

// Helper used by every checker: record a pass/fail observation for `law`,
// keeping only the first witness.
class law_acc {
public:
  explicit law_acc(std::string name) { res_.law = std::move(name); }
  void tally(bool ok) {
    ++res_.checked;
    if (!ok && res_.passed) res_.passed = false;
  }
  void tally(bool ok, std::vector<long long> witness, std::string detail) {
    ++res_.checked;
    if (!ok && res_.passed) {
      res_.passed = false;
      res_.witness = std::move(witness);
      res_.detail = std::move(detail);
    }
  }
  law_result take() { return std::move(res_); }

private:
  law_result res_;
};

}  // namespace dblkit

#endif
