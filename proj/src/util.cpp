#include "twocat/util.hpp"

#include <map>

namespace twocat {

std::string bracket(const std::vector<std::string>& parts, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  s += close;
  return s;
}

void uniquify(std::vector<std::string>& names, const std::function<std::string(int)>& qualifier) {
  std::map<std::string, int> count;
  for (auto& n : names) ++count[n];
  for (int i = 0; i < int(names.size()); ++i)
    if (count[names[i]] > 1) names[i] += "@" + qualifier(i);
}

}  // namespace twocat
