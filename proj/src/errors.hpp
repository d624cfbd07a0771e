#pragma once

#include <stdexcept>
#include <string>

namespace autkit {

// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
  invalid_argument = 1,
  parse_error = 2,
  degree_mismatch = 3,
  budget_exceeded = 4,
  order_exceeds_cap = 5,
  disconnected = 6,
  not_a_subgroup = 7,
  search_bound_exceeded = 8,
  size_limit_exceeded = 9,
  generator_not_in_set = 10,
  internal_error = 11,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace autkit
