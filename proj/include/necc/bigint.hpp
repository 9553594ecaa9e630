#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace necc {

// Minimal unsigned big integer, enough for binomial sums in field-size
// bounds. Little-endian limbs, base 10^9.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(uint64_t v);  // NOLINT(google-explicit-constructor)

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator*=(uint32_t rhs);
    // Exact division by a small divisor; quotient must be exact in our uses
    // (binomial coefficients), remainder is discarded.
    BigUint& operator/=(uint32_t rhs);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator*(BigUint a, uint32_t b) { return a *= b; }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator<(const BigUint& a, const BigUint& b);

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    std::string to_string() const;

  private:
    void trim();
    std::vector<uint32_t> limbs_;
};

// n choose k; 0 when k > n.
BigUint binomial(long n, long k);

}  // namespace necc
