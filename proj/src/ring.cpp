#include "retract/ring.hpp"

#include <set>
#include <stdexcept>

namespace retract {

Ring::Ring(Domain domain, std::size_t d, std::vector<std::string> names)
    : domain_(std::move(domain)), d_(d), names_(std::move(names)) {
  if (d_ > names_.size()) throw std::invalid_argument("more Laurent variables than variables");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable name " + name);
  }
}

RingPtr Ring::make(Domain domain, std::size_t n, std::size_t d) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return std::make_shared<const Ring>(std::move(domain), d, std::move(names));
}

RingPtr Ring::make(Domain domain, std::size_t d, std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(domain), d, std::move(names));
}

std::size_t Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

bool Ring::admits(const Exponent& e) const {
  if (e.size() != names_.size()) return false;
  for (std::size_t i = d_; i < e.size(); ++i) {
    if (e[i] < 0) return false;
  }
  return true;
}

}  // namespace retract
