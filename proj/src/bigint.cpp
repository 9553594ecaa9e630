#include "necc/bigint.hpp"

namespace necc {

namespace {
constexpr uint64_t kBase = 1000000000ULL;
}

BigUint::BigUint(uint64_t v) {
    limbs_.clear();
    do {
        limbs_.push_back(static_cast<uint32_t>(v % kBase));
        v /= kBase;
    } while (v > 0);
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    uint64_t carry = 0;
    size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    for (size_t i = 0; i < n; ++i) {
        uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(sum % kBase);
        carry = sum / kBase;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(uint32_t rhs) {
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t prod = static_cast<uint64_t>(limb) * rhs + carry;
        limb = static_cast<uint32_t>(prod % kBase);
        carry = prod / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
    return *this;
}

BigUint& BigUint::operator/=(uint32_t rhs) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = rem * kBase + limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / rhs);
        rem = cur % rhs;
    }
    trim();
    return *this;
}

bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
}

std::string BigUint::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUint binomial(long n, long k) {
    if (k < 0 || k > n) return BigUint(0);
    if (k > n - k) k = n - k;
    BigUint acc(1);
    for (long i = 1; i <= k; ++i) {
        acc *= static_cast<uint32_t>(n - k + i);
        acc /= static_cast<uint32_t>(i);
    }
    return acc;
}

}  // namespace necc
