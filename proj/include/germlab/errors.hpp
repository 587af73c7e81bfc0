#pragma once

#include <stdexcept>
#include <string>

namespace germlab {

enum class Errc {
  invalid_input,        // malformed input, ring mismatch, bad grammar
  not_finite,           // germ has a non-isolated zero
  not_principal,        // elimination ideal has more than one generator
  clean_fiber_violation,// common zero set of (f, h) is larger than the origin
  validation_failed,    // degree of the distinguished factor does not divide m0
  not_distinguishable,  // eliminant restricted to w = 0 is not s^k * unit
  hypothesis_fails,     // rank criterion fails at a sample point
  not_singular,         // gradient has a nonzero constant term
  degenerate,           // polygon operation on a single-vertex polygon
  indeterminate,        // truncation too small; handled internally by re-lifting
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

  // Process exit code contract: 0 ok, 1 internal, 2 invalid input,
  // 3 not finite, 4 assumption violated.
  int exit_code() const {
    switch (code_) {
      case Errc::invalid_input:
        return 2;
      case Errc::not_finite:
        return 3;
      case Errc::not_principal:
      case Errc::clean_fiber_violation:
      case Errc::validation_failed:
      case Errc::not_distinguishable:
      case Errc::hypothesis_fails:
      case Errc::not_singular:
      case Errc::degenerate:
        return 4;
      default:
        return 1;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace germlab
