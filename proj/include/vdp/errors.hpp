#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vdp {

enum class ErrorCode {
  malformed_rotation,
  self_loop,
  negative_length,
  disconnected,
  euler_violation,
  terminal_not_on_face,
  same_face,
  bad_params,
  too_large,
  parse_error,
  io_error,
  overflow,
  not_disjoint,
  potential_violation,
  invariant,  // internal solver invariant broken (solver bug)
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

// All lengths and costs are exact 64-bit integers; sums are overflow-checked.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer overflow in subtraction");
  return r;
}

}  // namespace vdp
