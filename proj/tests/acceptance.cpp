// Acceptance gate: runs the nine structural criteria in order and prints
// one line each. Exit status 0 means every criterion either passed or
// failed exactly on its recorded defect set; anything else is a hard fail.

#include <cstdio>
#include <exception>

#include "hopfoct/verify.hpp"

int main() {
  using hopfoct::Criterion;
  int bad = 0;
  double total = 0.0;
  for (int k = 1; k <= 9; ++k) {
    Criterion c;
    try {
      c = hopfoct::runCriterion(k);
    } catch (const std::exception& e) {
      c = Criterion{k, "criterion", false, false,
                    std::string("exception: ") + e.what(), 0.0};
    }
    total += c.seconds;
    const char* verdict = c.pass               ? "PASS"
                          : c.documented       ? "FAIL (documented)"
                                               : "FAIL";
    std::printf("[%d/9] %-18s %-18s %7.2fs  %s\n", c.number, c.name.c_str(),
                verdict, c.seconds, c.detail.c_str());
    std::fflush(stdout);
    if (!c.acceptable()) ++bad;
  }
  std::printf("%s: %d/9 acceptable, %.2fs total\n", bad == 0 ? "OK" : "FAIL",
              9 - bad, total);
  return bad == 0 ? 0 : 1;
}
