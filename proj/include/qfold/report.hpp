#pragma once

#include <string>
#include <vector>

namespace qf {

// One verified identity or structural clause.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckItem> items;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
};

} // namespace qf
