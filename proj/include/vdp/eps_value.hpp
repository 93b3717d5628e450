#pragma once

#include <cstdint>

#include "vdp/errors.hpp"

namespace vdp {

// Exact pair arithmetic realizing an infinitesimal perturbation: the value
// real + eps*e for an infinitesimally small e > 0. Comparison is
// lexicographic; infinity is a distinct top element used for non-residual
// dual edges.
struct EpsValue {
  int64_t real = 0;
  int64_t eps = 0;
  bool inf = false;

  static EpsValue infinity() { return {0, 0, true}; }

  friend bool operator==(const EpsValue& a, const EpsValue& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.real == b.real && a.eps == b.eps;
  }
  friend bool operator!=(const EpsValue& a, const EpsValue& b) { return !(a == b); }
  friend bool operator<(const EpsValue& a, const EpsValue& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.real != b.real ? a.real < b.real : a.eps < b.eps;
  }
  friend bool operator>(const EpsValue& a, const EpsValue& b) { return b < a; }
  friend bool operator<=(const EpsValue& a, const EpsValue& b) { return !(b < a); }
  friend bool operator>=(const EpsValue& a, const EpsValue& b) { return !(a < b); }

  friend EpsValue operator+(const EpsValue& a, const EpsValue& b) {
    if (a.inf || b.inf) return infinity();
    return {checked_add(a.real, b.real), checked_add(a.eps, b.eps), false};
  }
  friend EpsValue operator-(const EpsValue& a, const EpsValue& b) {
    if (a.inf) {
      require(!b.inf, ErrorCode::overflow, "infinity minus infinity");
      return infinity();
    }
    require(!b.inf, ErrorCode::overflow, "finite minus infinity");
    return {checked_sub(a.real, b.real), checked_sub(a.eps, b.eps), false};
  }
  EpsValue& operator+=(const EpsValue& b) { return *this = *this + b; }
  EpsValue& operator-=(const EpsValue& b) { return *this = *this - b; }

  bool positive() const { return inf || EpsValue{} < *this; }
};

}  // namespace vdp
