#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mcb/error.hpp"

namespace mcb {

// Arbitrary-precision unsigned integer, base 10^9 limbs, little-endian.
// Cover counts outgrow int64 quickly, so all counting runs through this.
// Only the operations the counting code needs: add, subtract, multiply by
// a small factor, compare, print.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value) {  // NOLINT(implicit)
    while (value) {
      limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
      value /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& o) {
    std::uint64_t carry = 0;
    const std::size_t m = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t v = carry + limbs_[i];
      if (i < o.limbs_.size()) v += o.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(v % kBase);
      carry = v / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  // Requires *this >= o.
  BigUint& operator-=(const BigUint& o) {
    if (*this < o) throw InputError("BigUint subtraction would underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t v = std::int64_t{limbs_[i]} - borrow -
                       (i < o.limbs_.size() ? std::int64_t{o.limbs_[i]} : 0);
      borrow = 0;
      if (v < 0) {
        v += kBase;
        borrow = 1;
      }
      limbs_[i] = static_cast<std::uint32_t>(v);
    }
    trim();
    return *this;
  }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

  // small must stay below 2^34 so limb * small + carry fits in 64 bits.
  BigUint& mul_small(std::uint64_t small) {
    if (small >= (std::uint64_t{1} << 34))
      throw ScopeError("BigUint::mul_small factor too large");
    if (small == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint64_t v = std::uint64_t{limb} * small + carry;
      limb = static_cast<std::uint32_t>(v % kBase);
      carry = v / kBase;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    return *this;
  }
  friend BigUint operator*(BigUint a, std::uint64_t small) {
    return a.mul_small(small);
  }

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigUint& a, const BigUint& b) {
    return !(a == b);
  }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      const std::string part = std::to_string(limbs_[i]);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace mcb
