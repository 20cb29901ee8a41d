// One line per criterion; nonzero exit if any fails. Also runs the shipped
// executable's selftest to confirm it works on its own.

#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "arrowgraph/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : arrowgraph::run_acceptance_suite()) {
    std::cout << arrowgraph::format_result(r) << "\n";
    all = all && r.passed;
  }

  const std::string command = std::string(ARROWGRAPH_EXECUTABLE) + " selftest > /dev/null";
  const int status = std::system(command.c_str());
  const bool standalone = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  std::cout << (standalone ? "PASS" : "FAIL") << "  selftest executable exits 0  (" << ARROWGRAPH_EXECUTABLE << ")\n";
  all = all && standalone;

  std::cout << (all ? "all acceptance criteria pass" : "acceptance criteria FAILED") << "\n";
  return all ? 0 : 1;
}
