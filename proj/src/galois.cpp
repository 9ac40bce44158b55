#include "ogff/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace ogff::gf {

namespace {

// Table sizes stay proportional to q, so this bounds memory, not math.
constexpr long kMaxOrder = 1L << 20;

// Dense coefficient vectors over GF(p), low degree first.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    }
    return r;
}

// Remainder of a by monic divisor d.
Poly poly_rem(Poly a, const Poly& d, long p) {
    const int dd = degree(d);
    for (int i = degree(a); i >= dd; --i) {
        const int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            long v = a[i - dd + j] - static_cast<long>(c) * d[j];
            a[i - dd + j] = static_cast<int>(((v % p) + p) % p);
        }
    }
    a.resize(std::max(dd, 1));
    return a;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible(const Poly& f, long p) {
    const int deg = degree(f);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly divisor(d + 1, 0);
            divisor[d] = 1;
            long rest = c;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            if (is_zero(poly_rem(f, divisor, p))) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool is_prime_power(long n, long* p_out, int* k_out) {
    if (n < 2) return false;
    long p = n;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            p = f;
            break;
        }
    }
    long rest = n;
    int k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

long FieldSpec::check_idx(long a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element index out of range");
    return a;
}

long FieldSpec::check_elem(const GfElement& a) const {
    if (static_cast<int>(a.coeffs.size()) != k_)
        throw std::invalid_argument("element has wrong coefficient count for this field");
    long idx = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        if (a.coeffs[i] < 0 || a.coeffs[i] >= p_)
            throw std::invalid_argument("element coefficient out of range [0, p)");
        idx = idx * p_ + a.coeffs[i];
    }
    return idx;
}

long FieldSpec::index_of(const GfElement& a) const { return check_elem(a); }

GfElement FieldSpec::element(long index) const {
    check_idx(index);
    GfElement e;
    e.coeffs.resize(k_);
    for (int i = 0; i < k_; ++i) {
        e.coeffs[i] = static_cast<int>(index % p_);
        index /= p_;
    }
    return e;
}

long FieldSpec::add_idx(long a, long b) const {
    check_idx(a);
    check_idx(b);
    long r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

long FieldSpec::neg_idx(long a) const {
    check_idx(a);
    long r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

long FieldSpec::sub_idx(long a, long b) const { return add_idx(a, neg_idx(b)); }

long FieldSpec::mul_idx(long a, long b) const {
    check_idx(a);
    check_idx(b);
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

long FieldSpec::inv_idx(long a) const {
    check_idx(a);
    if (a == 0) throw std::domain_error("inversion of zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

long FieldSpec::pow_idx(long a, long e) const {
    check_idx(a);
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("0 raised to a negative power");
    }
    const long om = q_ - 1;
    long em = e % om;
    if (em < 0) em += om;
    return exp_[(log_[a] * em) % om];
}

GfElement FieldSpec::add(const GfElement& a, const GfElement& b) const {
    return element(add_idx(check_elem(a), check_elem(b)));
}
GfElement FieldSpec::sub(const GfElement& a, const GfElement& b) const {
    return element(sub_idx(check_elem(a), check_elem(b)));
}
GfElement FieldSpec::neg(const GfElement& a) const { return element(neg_idx(check_elem(a))); }
GfElement FieldSpec::mul(const GfElement& a, const GfElement& b) const {
    return element(mul_idx(check_elem(a), check_elem(b)));
}
GfElement FieldSpec::inv(const GfElement& a) const { return element(inv_idx(check_elem(a))); }
GfElement FieldSpec::pow(const GfElement& a, long e) const {
    return element(pow_idx(check_elem(a), e));
}
int FieldSpec::trace(const GfElement& a) const { return trace_[check_elem(a)]; }

std::vector<GfElement> FieldSpec::enumerate() const {
    std::vector<GfElement> out;
    out.reserve(q_);
    for (long i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

FieldSpec make_field(long p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree k must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kMaxOrder / p) throw std::length_error("field order p^k exceeds table capacity");
        q *= p;
    }

    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;

    // Smallest irreducible monic modulus, non-leading coefficients read as a
    // base-p number with the x^{k-1} coefficient most significant.
    for (long c = 0;; ++c) {
        if (c >= q) throw std::logic_error("no irreducible polynomial found");  // unreachable
        Poly cand(k + 1, 0);
        cand[k] = 1;
        long rest = c;
        for (int i = 0; i < k; ++i) {
            cand[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        if (irreducible(cand, p)) {
            f.modulus_ = cand;
            break;
        }
    }

    // index <-> coefficient vector helpers against the chosen modulus
    auto decode = [&](long idx) {
        Poly e(k, 0);
        for (int i = 0; i < k; ++i) {
            e[i] = static_cast<int>(idx % p);
            idx /= p;
        }
        return e;
    };
    auto encode = [&](const Poly& e) {
        long idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * p + e[i];
        return idx;
    };
    auto mul_slow = [&](long a, long b) {
        Poly r = poly_rem(poly_mul(decode(a), decode(b), p), f.modulus_, p);
        r.resize(k, 0);
        return encode(r);
    };
    auto pow_slow = [&](long a, long e) {
        long r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return r;
    };

    // Log/antilog tables from the smallest generator of the unit group.
    const auto factors = prime_factors(q - 1);
    long gen = 0;
    for (long g = 1; g < q && gen == 0; ++g) {
        bool primitive = q == 2;  // trivial unit group
        if (!primitive) {
            primitive = true;
            for (long fac : factors)
                if (pow_slow(g, (q - 1) / fac) == 1) {
                    primitive = false;
                    break;
                }
        }
        if (primitive) gen = g;
    }

    f.exp_.resize(q - 1);
    f.log_.assign(q, 0);
    long cur = 1;
    for (long e = 0; e < q - 1; ++e) {
        f.exp_[e] = cur;
        f.log_[cur] = e;
        cur = mul_slow(cur, gen);
    }

    f.trace_.resize(q);
    for (long a = 0; a < q; ++a) {
        long acc = a, y = a;
        for (int i = 1; i < k; ++i) {
            y = pow_slow(y, p);
            acc = f.add_idx(acc, y);
        }
        if (acc >= p) throw std::logic_error("trace fell outside the prime subfield");
        f.trace_[a] = static_cast<int>(acc);
    }

    return f;
}

}  // namespace ogff::gf
