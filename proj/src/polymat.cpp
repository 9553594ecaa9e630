#include "necc/polymat.hpp"

#include <algorithm>
#include <numeric>

namespace necc {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw FieldMismatch("operands belong to different fields");
}

}  // namespace

Poly::Poly(Field f, std::vector<int> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (int c : coeffs_)
        if (!field_.is_element(c)) throw Error("polynomial coefficient outside the field");
    normalize();
}

Poly Poly::constant(const Field& f, int value) {
    return Poly(f, value == 0 ? std::vector<int>{} : std::vector<int>{value});
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = a.field_.add(c[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(c));
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.deg(); ++i) {
        int c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'z';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

ScalarMatrix::ScalarMatrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

ScalarMatrix::ScalarMatrix(Field f, int rows, int cols, std::vector<int> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionMismatch("entry count does not match matrix dimensions");
    for (int v : e_)
        if (!field_.is_element(v)) throw Error("matrix entry outside the field");
}

ScalarMatrix ScalarMatrix::identity(const Field& f, int n) {
    ScalarMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void ScalarMatrix::set(int r, int c, int v) {
    if (!field_.is_element(v)) throw Error("matrix entry outside the field");
    e_[static_cast<size_t>(r) * cols_ + c] = v;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw DimensionMismatch("inner matrix dimensions disagree");
    const Field& f = a.field_;
    ScalarMatrix c(f, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                c.set(i, j, f.add(c.at(i, j), f.mul(aik, b.at(k, j))));
        }
    return c;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix dimensions disagree");
    ScalarMatrix c(a.field_, a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) c.set(i, j, a.field_.add(a.at(i, j), b.at(i, j)));
    return c;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const Field& f = m.field();
    const int n = m.rows();
    ScalarMatrix a = m;
    ScalarMatrix inv = ScalarMatrix::identity(f, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Singular("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                int t = a.at(col, j);
                a.set(col, j, a.at(pivot, j));
                a.set(pivot, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, t);
            }
        }
        int scale = f.inv(a.at(col, col));
        for (int j = 0; j < n; ++j) {
            a.set(col, j, f.mul(a.at(col, j), scale));
            inv.set(col, j, f.mul(inv.at(col, j), scale));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int factor = a.at(r, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(col, j))));
                inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j))));
            }
        }
    }
    return inv;
}

std::vector<int> mul_row(const std::vector<int>& x, const ScalarMatrix& m) {
    if (static_cast<int>(x.size()) != m.rows())
        throw DimensionMismatch("row vector length does not match matrix rows");
    const Field& f = m.field();
    std::vector<int> y(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
    }
    return y;
}

PolyMatrix::PolyMatrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("empty polynomial matrix");
    e_.assign(static_cast<size_t>(rows) * cols, Poly(field_));
}

PolyMatrix::PolyMatrix(Field f, int rows, int cols, std::vector<Poly> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionMismatch("entry count does not match matrix dimensions");
    for (const Poly& p : e_) require_same_field(p.field(), field_);
}

void PolyMatrix::set(int r, int c, Poly p) {
    require_same_field(p.field(), field_);
    e_[static_cast<size_t>(r) * cols_ + c] = std::move(p);
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<int> PolyMatrix::row_degrees() const {
    std::vector<int> nu(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) nu[i] = std::max(nu[i], std::max(0, at(i, j).deg()));
    return nu;
}

int PolyMatrix::degree() const {
    auto nu = row_degrees();
    return std::accumulate(nu.begin(), nu.end(), 0);
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

PolyMatrix polymat_times_scalar(const PolyMatrix& g, const ScalarMatrix& m) {
    require_same_field(g.field(), m.field());
    if (g.cols() != m.rows()) throw DimensionMismatch("G cols must equal M rows");
    const Field& f = g.field();
    PolyMatrix out(f, g.rows(), m.cols());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Poly acc(f);
            for (int k = 0; k < g.cols(); ++k)
                acc = acc + g.at(i, k) * Poly::constant(f, m.at(k, j));
            out.set(i, j, std::move(acc));
        }
    return out;
}

std::string to_string_row(const PolyMatrix& g, int row) {
    std::string out = "[";
    for (int j = 0; j < g.cols(); ++j) {
        if (j) out += ", ";
        out += to_string(g.at(row, j));
    }
    out += "]";
    return out;
}

int hamming_weight(const std::vector<int>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

}  // namespace necc
