#pragma once

#include <string>
#include <vector>

#include "necc/galois.hpp"

namespace necc {

// Polynomial in the delay variable z over F_q. Canonical form: no trailing
// zero coefficients; the zero polynomial has an empty coefficient list and
// deg() returns kDegZero (stands in for "minus infinity").
class Poly {
  public:
    static constexpr int kDegZero = -1;

    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<int> coeffs);

    static Poly constant(const Field& f, int value);
    static Poly zero(const Field& f) { return Poly(f); }

    const Field& field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void normalize();

    Field field_;
    std::vector<int> coeffs_;
};

// Ascending-power rendering matching the tables: "1+z^2", "2z", "0".
std::string to_string(const Poly& p);

// Dense row-major matrix over F_q.
class ScalarMatrix {
  public:
    ScalarMatrix(Field f, int rows, int cols);
    ScalarMatrix(Field f, int rows, int cols, std::vector<int> entries);

    static ScalarMatrix identity(const Field& f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v);
    const std::vector<int>& entries() const { return e_; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

  private:
    Field field_;
    int rows_, cols_;
    std::vector<int> e_;
};

// Gauss-Jordan inverse; throws Singular for rank-deficient input.
ScalarMatrix inverse(const ScalarMatrix& m);

// Row vector times matrix (the y = x M convention used throughout).
std::vector<int> mul_row(const std::vector<int>& x, const ScalarMatrix& m);

// Matrix over F_q[z]; rows of a generator matrix live here.
class PolyMatrix {
  public:
    PolyMatrix(Field f, int rows, int cols);
    PolyMatrix(Field f, int rows, int cols, std::vector<Poly> entries);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Poly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, Poly p);

    bool is_zero() const;
    // nu_i = max_j deg(g_ij); 0 for an all-zero row.
    std::vector<int> row_degrees() const;
    // delta = sum of row degrees.
    int degree() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  private:
    Field field_;
    int rows_, cols_;
    std::vector<Poly> e_;
};

// G * M with scalar entries lifted to constant polynomials.
PolyMatrix polymat_times_scalar(const PolyMatrix& g, const ScalarMatrix& m);

// One generator row rendered as "[1+z^2, 1+z+z^2]".
std::string to_string_row(const PolyMatrix& g, int row);

int hamming_weight(const std::vector<int>& v);

}  // namespace necc
