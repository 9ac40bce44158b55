#include "ogff/mubs.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ogff/galois.hpp"

namespace ogff::mubs {

namespace {

using std::complex;

// ---------------------------------------------------------------------------
// Galois ring GR(4, k) = Z4[x]/(h), h the Graeffe/Hensel lift of the GF(2^k)
// modulus. Only what the even-characteristic MUB construction needs: ring
// arithmetic, the Teichmueller set, Frobenius, and the trace down to Z4.
// Kept local to this module so `galois` stays a pure field library.
// ---------------------------------------------------------------------------
class GaloisRing4 {
public:
    explicit GaloisRing4(const gf::FieldSpec& base) : k_(base.k()) {
        if (base.p() != 2) throw std::logic_error("GR(4,k) lift needs a characteristic-2 field");
        size_ = 1;
        for (int i = 0; i < k_; ++i) size_ *= 4;

        // Graeffe lift: h(x^2) = +/- (e(x)^2 - o(x)^2) over Z4, where e and o
        // are the even and odd parts of the binary modulus.
        const auto& f = base.modulus();
        std::vector<long> e(f.size(), 0), o(f.size(), 0);
        for (size_t i = 0; i < f.size(); ++i) (i % 2 == 0 ? e[i] : o[i]) = f[i];
        std::vector<long> r(2 * f.size() - 1, 0);
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j) {
                r[i + j] += e[i] * e[j];
                r[i + j] -= o[i] * o[j];
            }
        h_.assign(k_ + 1, 0);
        for (int i = 0; i <= k_; ++i) h_[i] = ((r[2 * i] % 4) + 4) % 4;
        if (h_[k_] == 3)
            for (auto& c : h_) c = (4 - c) % 4;
        if (h_[k_] != 1) throw std::logic_error("Hensel lift is not monic");

        // Teichmueller set: the 2^k solutions of z^{2^k} = z, indexed by the
        // GF(2^k) enumeration order of their mod-2 residues.
        teich_.assign(1L << k_, -1);
        for (long z = 0; z < size_; ++z)
            if (pw(z, 1L << k_) == z) teich_[residue(z)] = z;
        for (long t : teich_)
            if (t < 0) throw std::logic_error("incomplete Teichmueller set");
    }

    long size() const { return size_; }
    long teichmueller(long gf_index) const { return teich_[gf_index]; }

    long add(long a, long b) const {
        long r = 0, s = 1;
        for (int i = 0; i < k_; ++i) {
            r += ((a % 4 + b % 4) % 4) * s;
            a /= 4;
            b /= 4;
            s *= 4;
        }
        return r;
    }

    long mul(long a, long b) const {
        std::vector<long> pa = digits(a), pb = digits(b);
        std::vector<long> prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % 4;
        // reduce by monic h
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            const long c = prod[d];
            if (c == 0) continue;
            for (int j = 0; j <= k_; ++j)
                prod[d - k_ + j] = ((prod[d - k_ + j] - c * h_[j]) % 4 + 4) % 4;
        }
        prod.resize(k_);
        return encode(prod);
    }

    long pw(long a, long e) const {
        long r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Frobenius: with z = t + 2w, t Teichmueller, phi(z) = t^2 + 2 w^2.
    long frobenius(long z) const {
        const long t = teich_[residue(z)];
        std::vector<long> diff = digits(add(z, neg(t)));
        for (auto& c : diff) c /= 2;  // even by construction
        const long w = encode(diff);
        return add(mul(t, t), mul(2, mul(w, w)));
    }

    // Trace to Z4; the result must be a ring constant.
    long trace(long z) const {
        long acc = z, y = z;
        for (int i = 1; i < k_; ++i) {
            y = frobenius(y);
            acc = add(acc, y);
        }
        if (acc % 4 != acc) throw std::logic_error("GR trace not in Z4");
        return acc;
    }

private:
    long residue(long z) const {  // coefficient-wise mod 2, as a GF(2^k) index
        long r = 0, s = 1;
        for (int i = 0; i < k_; ++i) {
            r += (z % 2) * s;
            z /= 4;
            s *= 2;
        }
        return r;
    }
    long neg(long z) const {
        long r = 0, s = 1;
        for (int i = 0; i < k_; ++i) {
            r += ((4 - z % 4) % 4) * s;
            z /= 4;
            s *= 4;
        }
        return r;
    }
    std::vector<long> digits(long z) const {
        std::vector<long> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = z % 4;
            z /= 4;
        }
        return d;
    }
    long encode(const std::vector<long>& d) const {
        long z = 0;
        for (int i = k_ - 1; i >= 0; --i) z = z * 4 + d[i];
        return z;
    }

    int k_;
    long size_ = 0;
    std::vector<long> h_;
    std::vector<long> teich_;
};

std::vector<Eigen::MatrixXcd> odd_char_bases(const gf::FieldSpec& field) {
    const long q = field.q();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(field.p());

    std::vector<Eigen::MatrixXcd> bases;
    for (long a = 0; a < q; ++a) {
        Eigen::MatrixXcd basis(q, q);
        for (long b = 0; b < q; ++b)
            for (long x = 0; x < q; ++x) {
                const long ax2 = field.mul_idx(a, field.mul_idx(x, x));
                const long bx = field.mul_idx(b, x);
                const int e = field.trace_idx(field.add_idx(ax2, bx));
                basis(x, b) = scale * std::polar(1.0, step * e);
            }
        bases.push_back(std::move(basis));
    }
    return bases;
}

std::vector<Eigen::MatrixXcd> even_char_bases(const gf::FieldSpec& field) {
    const long q = field.q();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const GaloisRing4 ring(field);
    static const complex<double> kI4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^e

    std::vector<Eigen::MatrixXcd> bases;
    for (long a = 0; a < q; ++a) {
        const long ta = ring.teichmueller(a);
        Eigen::MatrixXcd basis(q, q);
        for (long b = 0; b < q; ++b) {
            const long c = ring.add(ta, ring.mul(2, ring.teichmueller(b)));
            for (long x = 0; x < q; ++x) {
                const long e = ring.trace(ring.mul(c, ring.teichmueller(x)));
                basis(x, b) = scale * kI4[e];
            }
        }
        bases.push_back(std::move(basis));
    }
    return bases;
}

}  // namespace

int dgs_bound(int m, Field field) {
    if (m < 1) throw std::invalid_argument("dimension must be >= 1");
    return field == Field::Complex ? m + 1 : m / 2 + 1;
}

MubFamily gen_complex_mubs(long q) {
    long p = 0;
    int k = 0;
    if (!gf::is_prime_power(q, &p, &k))
        throw std::invalid_argument("complex MUB generator needs a prime power dimension");
    const auto field = gf::make_field(p, k);

    MubFamily fam;
    fam.field = Field::Complex;
    fam.m = static_cast<int>(q);
    fam.provenance = (p == 2 ? "galois-ring-gr4:q=" : "trace-quadratic:q=") + std::to_string(q);
    fam.bases.push_back(Eigen::MatrixXcd::Identity(q, q));
    auto constructed = p == 2 ? even_char_bases(field) : odd_char_bases(field);
    for (auto& b : constructed) fam.bases.push_back(std::move(b));

    const auto rep = verify_mubs(fam, kTraceTol);
    if (!rep.orthonormal || !rep.unbiased || !rep.bound_ok)
        throw construction_defect("generated MUB family failed verification, max deviation " +
                                  std::to_string(rep.max_deviation));
    return fam;
}

MubFamily gen_real_mubs(int m) {
    if (m != 4)
        throw unsupported_parameters(
            "built-in real MUBs exist only for m = 4; import a verified family for other powers of four");

    // Standard basis plus the two sign bases whose mutual Gram has all
    // entries of magnitude 1/2.
    Eigen::MatrixXd h1(4, 4), h2(4, 4);
    h1 << 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1;
    h2 << -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1;

    MubFamily fam;
    fam.field = Field::Real;
    fam.m = 4;
    fam.provenance = "real-m4";
    fam.bases.push_back(Eigen::MatrixXcd::Identity(4, 4));
    fam.bases.push_back((0.5 * h1).cast<complex<double>>());
    fam.bases.push_back((0.5 * h2).cast<complex<double>>());

    const auto rep = verify_mubs(fam, kTraceTol);
    if (!rep.orthonormal || !rep.unbiased || !rep.bound_ok)
        throw construction_defect("real m=4 MUB family failed verification");
    return fam;
}

MubReport verify_mubs(const MubFamily& fam, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    MubReport rep;
    rep.K = fam.K();
    rep.bound_ok = rep.K <= dgs_bound(fam.m, fam.field);
    rep.orthonormal = true;
    rep.unbiased = true;

    const int m = fam.m;
    const double target = 1.0 / m;
    for (int s = 0; s < fam.K(); ++s) {
        if (fam.bases[s].rows() != m || fam.bases[s].cols() != m)
            throw std::invalid_argument("basis matrix has wrong dimensions");
        for (int t = s; t < fam.K(); ++t) {
            const Eigen::MatrixXcd gram = fam.bases[s].adjoint() * fam.bases[t];
            for (int j = 0; j < m; ++j)
                for (int c = 0; c < m; ++c) {
                    const double overlap2 = std::norm(gram(j, c));
                    double dev;
                    if (s == t)
                        dev = std::abs(overlap2 - (j == c ? 1.0 : 0.0));
                    else
                        dev = std::abs(overlap2 - target);
                    rep.max_deviation = std::max(rep.max_deviation, dev);
                    if (dev > tol) (s == t ? rep.orthonormal : rep.unbiased) = false;
                }
        }
    }
    return rep;
}

}  // namespace ogff::mubs
