#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace twocat {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= std::size_t(std::uint32_t(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

using KeyIndex = std::unordered_map<std::vector<int>, int, KeyHash>;

inline int key_find(const KeyIndex& ix, const std::vector<int>& k) {
  auto it = ix.find(k);
  return it == ix.end() ? -1 : it->second;
}

std::string bracket(const std::vector<std::string>& parts, char open = '[', char close = ']');

// Append qualifier(i) to every name that is not unique.
void uniquify(std::vector<std::string>& names, const std::function<std::string(int)>& qualifier);

}  // namespace twocat
