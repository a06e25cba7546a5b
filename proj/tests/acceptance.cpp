#include <cstdlib>
#include <iostream>
#include <string>

#include "symbic/selftest.hpp"

int main(int argc, char** argv) {
  symbic::SelftestOptions options;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--long") {
      options.long_running = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else {
      only = std::atoi(arg.c_str());
      if (only < 1 || only > symbic::kCriteria) {
        std::cerr << "usage: acceptance [criterion 1-" << symbic::kCriteria << "] [--long] [--seed S]\n";
        return 2;
      }
    }
  }
  bool all = true;
  for (int id = 1; id <= symbic::kCriteria; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = symbic::run_criterion(id, options);
    std::cout << symbic::summary_line(r) << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
