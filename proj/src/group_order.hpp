#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>

namespace autkit {

// Arbitrary-precision nonnegative integer used for group orders and counts.
// Thin wrapper over GMP so the rest of the library never touches mpz_class
// directly and the C API can hand orders out as decimal strings.
class GroupOrder {
 public:
  GroupOrder() : value_(0) {}
  explicit GroupOrder(uint64_t v) { set_u64(v); }
  explicit GroupOrder(const mpz_class& v) : value_(v) {}

  static GroupOrder one() { return GroupOrder(1); }
  static GroupOrder factorial(uint32_t n);
  static GroupOrder from_decimal(const std::string& text);

  GroupOrder& operator*=(const GroupOrder& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  GroupOrder& operator*=(uint64_t rhs) {
    value_ *= scalar(rhs);
    return *this;
  }
  friend GroupOrder operator*(GroupOrder lhs, const GroupOrder& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend GroupOrder operator*(GroupOrder lhs, uint64_t rhs) {
    lhs *= rhs;
    return lhs;
  }

  GroupOrder pow(uint32_t exponent) const;

  friend bool operator==(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const GroupOrder& a, const GroupOrder& b) {
    return a.value_ >= b.value_;
  }

  bool operator==(uint64_t v) const { return value_ == scalar(v); }
  bool operator!=(uint64_t v) const { return value_ != scalar(v); }

  // True when the value fits in uint64_t.
  bool fits_u64() const;
  uint64_t to_u64() const;  // caller must check fits_u64()
  std::string to_decimal() const { return value_.get_str(); }

  const mpz_class& raw() const { return value_; }

 private:
  void set_u64(uint64_t v);
  static mpz_class scalar(uint64_t v);
  mpz_class value_;
};

}  // namespace autkit
