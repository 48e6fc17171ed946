#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "retract/coeff.hpp"

namespace retract {

// Dense exponent vector of length n. Entries past the Laurent block are >= 0.
using Exponent = std::vector<std::int64_t>;

/// B = R[x1^±,...,xd^±, x_{d+1},...,xn]. Variables 0..d-1 are inverted.
class Ring {
 public:
  /// Throws std::invalid_argument on d > n, a wrong name count or duplicate names.
  Ring(Domain domain, std::size_t d, std::vector<std::string> names);

  /// Names x1..xn.
  static std::shared_ptr<const Ring> make(Domain domain, std::size_t n, std::size_t d);
  static std::shared_ptr<const Ring> make(Domain domain, std::size_t d, std::vector<std::string> names);

  std::size_t n() const { return names_.size(); }
  std::size_t d() const { return d_; }
  const Domain& domain() const { return domain_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool is_laurent(std::size_t i) const { return i < d_; }

  /// Index of a variable name, or n() when absent.
  std::size_t index_of(const std::string& name) const;

  /// True iff the exponent has the right length and no negative entry
  /// outside the Laurent block.
  bool admits(const Exponent& e) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.d_ == b.d_ && a.domain_ == b.domain_ && a.names_ == b.names_;
  }

 private:
  Domain domain_;
  std::size_t d_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace retract
