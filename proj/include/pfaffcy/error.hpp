#pragma once

#include <stdexcept>
#include <string>

namespace pfaffcy {

/// Error categories surfaced through the C API as numeric codes.
enum class Errc {
  invalid_argument = 1,
  not_invertible,
  odd_support,
  ring_mismatch,
  degenerate_sample,
  not_a_bundle,
  positive_dimensional,
  wrong_generic_rank,
  codimension,
  inconsistent,
  inconclusive,
  unsupported,
  io,
  report_inconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pfaffcy
