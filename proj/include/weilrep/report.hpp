#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weilrep {

/// One verified law: its coverage mode, how many instances were checked and,
/// on failure, a counterexample description sufficient to reproduce.
struct CheckItem {
  std::string name;
  std::string mode;  // "exhaustive" or "sampled"
  uint64_t checked = 0;
  bool pass = false;
  std::string counterexample;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;
  bool pass = false;

  void finalize() {
    pass = true;
    for (const CheckItem& item : items) pass = pass && item.pass;
  }
};

}  // namespace weilrep
