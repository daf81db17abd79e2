// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <cstring>
#include <iostream>

#include "mfaces/repro.hpp"

int main(int argc, char** argv) {
  mfaces::ReproOptions opt;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--data-dir") == 0) opt.data_dir = argv[i + 1];
  }
  bool failed = false;
  for (const auto& r : mfaces::run_acceptance(opt)) {
    std::cout << mfaces::render_line(r) << "\n";
    failed = failed || r.status == mfaces::Status::Fail;
  }
  return failed ? 1 : 0;
}
