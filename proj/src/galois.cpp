#include "necc/galois.hpp"

#include <algorithm>
#include <string>

namespace necc {

namespace {

struct ModulusEntry {
    int p;
    int m;
    std::vector<int> coeffs;  // ascending, monic
};

// Lexicographically smallest monic primitive polynomial per (p, m).
// Generated offline and re-verified at construction (irreducibility by trial
// division, primitivity by the order of x).
const std::vector<ModulusEntry>& modulus_table() {
    static const std::vector<ModulusEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 0, 1, 1}},
        {2, 4, {1, 0, 0, 1, 1}},
        {2, 5, {1, 0, 0, 1, 0, 1}},
        {2, 6, {1, 0, 0, 0, 0, 1, 1}},
        {2, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
        {2, 8, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
        {2, 9, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
        {2, 11, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1}},
        {2, 12, {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1}},
        {2, 13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
        {2, 14, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1}},
        {2, 15, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {2, 16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1}},
        {3, 2, {2, 1, 1}},
        {3, 3, {1, 0, 2, 1}},
        {3, 4, {2, 0, 0, 1, 1}},
        {3, 5, {1, 0, 0, 0, 2, 1}},
        {3, 6, {2, 0, 0, 0, 0, 1, 1}},
        {3, 7, {1, 0, 0, 0, 0, 1, 2, 1}},
        {3, 8, {2, 0, 0, 0, 0, 1, 0, 0, 1}},
        {3, 9, {1, 0, 0, 0, 0, 0, 2, 1, 0, 1}},
        {3, 10, {2, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1}},
        {5, 2, {2, 1, 1}},
        {5, 3, {2, 0, 1, 1}},
        {5, 4, {2, 0, 2, 1, 1}},
        {5, 5, {2, 0, 0, 0, 3, 1}},
        {5, 6, {2, 0, 0, 0, 0, 1, 1}},
        {7, 2, {3, 1, 1}},
        {7, 3, {2, 1, 1, 1}},
        {7, 4, {3, 0, 1, 1, 1}},
        {7, 5, {2, 0, 0, 0, 2, 1}},
        {11, 2, {2, 4, 1}},
        {11, 3, {3, 0, 1, 1}},
        {11, 4, {2, 0, 0, 4, 1}},
        {13, 2, {2, 1, 1}},
        {13, 3, {2, 0, 1, 1}},
        {13, 4, {2, 0, 2, 6, 1}},
    };
    return table;
}

// Multiply residue polynomials (base-p digit vectors of length m) modulo the
// field modulus. Used only for table construction and verification.
std::vector<int> residue_mul(const std::vector<int>& a, const std::vector<int>& b, int p,
                             const std::vector<int>& modulus) {
    const int m = static_cast<int>(modulus.size()) - 1;
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int d = 2 * m - 2; d >= m; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int k = 0; k < m; ++k) {
            int v = prod[d - m + k] - c * modulus[k];
            prod[d - m + k] = ((v % p) + p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

// Trial division by every monic polynomial of degree 1..m/2 over F_p.
bool irreducible_by_trial_division(const std::vector<int>& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> g(d + 1, 0);
            g[d] = 1;
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            std::vector<int> r = f;
            int rdeg = m;
            while (rdeg >= d) {
                while (rdeg > 0 && r[rdeg] == 0) --rdeg;
                if (rdeg < d || (rdeg == 0 && r[0] == 0)) break;
                int lead = r[rdeg];
                int shift = rdeg - d;
                for (int k = 0; k <= d; ++k) {
                    int v = r[shift + k] - lead * g[k];
                    r[shift + k] = ((v % p) + p) % p;
                }
            }
            bool zero = std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
            if (zero) return false;
        }
    }
    return true;
}

long mod_pow(long a, long e, long mod) {
    long r = 1 % mod;
    a %= mod;
    while (e > 0) {
        if (e & 1) r = r * a % mod;
        a = a * a % mod;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int p, int m) : p_(p), m_(m) {
    if (m < 1) throw Error("extension degree must be >= 1");
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw UnsupportedSize("p^m exceeds 2^16");
    }
    q_ = static_cast<int>(q);
    if (m_ > 1) {
        const auto& table = modulus_table();
        auto it = std::find_if(table.begin(), table.end(),
                               [&](const ModulusEntry& e) { return e.p == p_ && e.m == m_; });
        if (it == table.end())
            throw NoPrimitivePoly("no built-in primitive polynomial for p=" + std::to_string(p) +
                                  ", m=" + std::to_string(m));
        primitive_poly_ = it->coeffs;
        if (!irreducible_by_trial_division(primitive_poly_, p_))
            throw NoPrimitivePoly("built-in modulus is reducible (table corrupt)");
        build_tables();
    }
}

void FieldSpec::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    auto pack = [&](const std::vector<int>& digits) {
        int v = 0;
        for (int i = m_ - 1; i >= 0; --i) v = v * p_ + digits[i];
        return v;
    };
    std::vector<int> x(m_, 0), acc(m_, 0);
    x[1] = 1;    // the element x (m >= 2 here)
    acc[0] = 1;  // x^0
    for (int i = 0; i < q_ - 1; ++i) {
        int packed = pack(acc);
        if (i > 0 && packed == 1)
            throw NoPrimitivePoly("built-in modulus is not primitive (table corrupt)");
        exp_[i] = static_cast<uint16_t>(packed);
        log_[packed] = static_cast<uint16_t>(i);
        acc = residue_mul(acc, x, p_, primitive_poly_);
    }
    if (pack(acc) != 1) throw NoPrimitivePoly("x does not generate the multiplicative group");
}

void FieldSpec::check(int a) const {
    if (!is_element(a)) throw Error("value " + std::to_string(a) + " outside field of order " +
                                    std::to_string(q_));
}

int FieldSpec::add(int a, int b) const {
    check(a);
    check(b);
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    int r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        int d = (a % p_ + b % p_) % p_;
        r += d * mul;
        mul *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

int FieldSpec::neg(int a) const {
    check(a);
    if (m_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    int r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        int d = (p_ - a % p_) % p_;
        r += d * mul;
        mul *= p_;
        a /= p_;
    }
    return r;
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::mul(int a, int b) const {
    check(a);
    check(b);
    if (m_ == 1) return static_cast<int>(static_cast<long>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    int e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

int FieldSpec::inv(int a) const {
    check(a);
    if (a == 0) throw Error("inverse of zero");
    if (m_ == 1) return static_cast<int>(mod_pow(a, p_ - 2, p_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FieldSpec::pow(int a, long e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Field make_field(int p, int m) { return Field(std::make_shared<FieldSpec>(p, m)); }

}  // namespace necc
