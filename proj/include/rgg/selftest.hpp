#ifndef RGG_SELFTEST_HPP
#define RGG_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rgg::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the full acceptance suite, printing one pass/fail line per criterion
// to `out`. Returns the individual results.
std::vector<CriterionResult> run_all(std::ostream& out, int threads = 4);

} // namespace rgg::selftest

#endif
