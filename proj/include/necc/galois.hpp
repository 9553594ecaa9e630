#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "necc/errors.hpp"

namespace necc {

// Finite field F_q, q = p^m <= 2^16. Elements are canonical integers 0..q-1;
// for m > 1 an element packs the residue polynomial's coefficients as base-p
// digits (digit i = coefficient of x^i). Immutable after construction.
class FieldSpec {
  public:
    FieldSpec(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }

    // Coefficients of the monic degree-m modulus, ascending; empty for m == 1.
    const std::vector<int>& primitive_poly() const { return primitive_poly_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws Error on a == 0
    int pow(int a, long e) const;

    bool is_element(int a) const { return a >= 0 && a < q_; }

  private:
    void check(int a) const;
    void build_tables();

    int p_, m_, q_;
    std::vector<int> primitive_poly_;
    // exp_[i] = x^i for i in 0..q-2, log_[a] defined for a != 0. m > 1 only.
    std::vector<uint16_t> exp_;
    std::vector<uint16_t> log_;
};

// Cheap-to-copy handle; all containers and operations share FieldSpec
// read-only. Equality is structural (same p, m, modulus).
class Field {
  public:
    Field() = default;
    explicit Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {}

    const FieldSpec& spec() const { return *spec_; }
    bool valid() const { return spec_ != nullptr; }

    int p() const { return spec_->p(); }
    int m() const { return spec_->m(); }
    int q() const { return spec_->q(); }
    int add(int a, int b) const { return spec_->add(a, b); }
    int sub(int a, int b) const { return spec_->sub(a, b); }
    int neg(int a) const { return spec_->neg(a); }
    int mul(int a, int b) const { return spec_->mul(a, b); }
    int inv(int a) const { return spec_->inv(a); }
    int pow(int a, long e) const { return spec_->pow(a, e); }
    bool is_element(int a) const { return spec_->is_element(a); }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.spec_ == b.spec_) return true;
        if (!a.spec_ || !b.spec_) return false;
        return a.p() == b.p() && a.m() == b.m() &&
               a.spec_->primitive_poly() == b.spec_->primitive_poly();
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    std::shared_ptr<const FieldSpec> spec_;
};

// Builds F_{p^m}. Throws NotPrime, UnsupportedSize (p^m > 2^16) or
// NoPrimitivePoly (m > 1 pair outside the built-in modulus table).
Field make_field(int p, int m = 1);

bool is_prime(long n);

}  // namespace necc
