#pragma once

#include <string>
#include <vector>

namespace gcred {

// Flat list of named pass/fail results with diagnostics; every verification
// entry point returns one of these instead of throwing on a failed check.
struct CheckReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string detail;
  };

  std::vector<Item> items;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back({name, pass, detail});
  }

  void require(const std::string& name, bool pass, const std::string& detail = "") {
    add(name, pass, detail);
  }

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void merge(const CheckReport& o, const std::string& prefix = "") {
    for (const auto& it : o.items) items.push_back({prefix + it.name, it.pass, it.detail});
  }

  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
    return "";
  }
};

}  // namespace gcred
