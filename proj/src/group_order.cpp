#include "group_order.hpp"

#include "errors.hpp"

namespace autkit {

GroupOrder GroupOrder::factorial(uint32_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return GroupOrder(r);
}

GroupOrder GroupOrder::from_decimal(const std::string& text) {
  mpz_class r;
  if (r.set_str(text, 10) != 0 || r < 0)
    fail(Errc::parse_error, "not a nonnegative decimal integer: " + text);
  return GroupOrder(r);
}

GroupOrder GroupOrder::pow(uint32_t exponent) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
  return GroupOrder(r);
}

bool GroupOrder::fits_u64() const {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64 && value_ >= 0;
}

uint64_t GroupOrder::to_u64() const {
  uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;  // callers guard with fits_u64()
}

void GroupOrder::set_u64(uint64_t v) {
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

mpz_class GroupOrder::scalar(uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace autkit
