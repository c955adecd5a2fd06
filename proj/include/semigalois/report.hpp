#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace semigalois {

  struct check_entry {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  struct check_report {
    std::vector<check_entry> entries;

    void add(std::string name, bool pass, std::string detail = {}) {
      entries.push_back({std::move(name), pass, std::move(detail)});
    }
    std::size_t failures() const {
      return static_cast<std::size_t>(
          std::count_if(entries.begin(), entries.end(), [](check_entry const& e) { return !e.pass; }));
    }
    bool all_pass() const {
      return failures() == 0;
    }
  };

}  // namespace semigalois
