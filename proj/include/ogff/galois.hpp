#pragma once

#include <cstdint>
#include <vector>

#include "ogff/common.hpp"

namespace ogff::gf {

/// Element of GF(p^k) in the polynomial basis; coeffs[i] multiplies x^i.
/// Interpreted relative to exactly one FieldSpec.
struct GfElement {
    std::vector<int> coeffs;
    bool operator==(const GfElement&) const = default;
};

/// Finite field GF(p^k) with exact table-driven arithmetic.
///
/// Elements are indexed 0..q-1 by reading the coefficient vector as a base-p
/// number (constant term least significant), so index order is the
/// coefficient-lexicographic enumeration order with zero first. The modulus is
/// the lexicographically smallest irreducible monic polynomial of degree k,
/// which makes constructions reproducible across runs and machines.
///
/// Immutable after construction; safe for concurrent read-only use.
class FieldSpec {
public:
    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    /// Coefficients of the monic modulus, length k+1, modulus()[k] == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    long index_of(const GfElement& a) const;
    GfElement element(long index) const;
    GfElement zero() const { return element(0); }
    GfElement one() const { return element(1); }

    GfElement add(const GfElement& a, const GfElement& b) const;
    GfElement sub(const GfElement& a, const GfElement& b) const;
    GfElement neg(const GfElement& a) const;
    GfElement mul(const GfElement& a, const GfElement& b) const;
    GfElement inv(const GfElement& a) const;  // throws std::domain_error on zero
    GfElement pow(const GfElement& a, long e) const;
    /// Absolute trace tr(x) = sum_{i<k} x^{p^i}, returned as a residue mod p.
    int trace(const GfElement& a) const;

    /// All q elements in deterministic index order (zero first).
    std::vector<GfElement> enumerate() const;

    // Index-based fast path used by the enumeration-heavy generators.
    long add_idx(long a, long b) const;
    long sub_idx(long a, long b) const;
    long neg_idx(long a) const;
    long mul_idx(long a, long b) const;
    long inv_idx(long a) const;
    long pow_idx(long a, long e) const;
    int trace_idx(long a) const { return trace_[check_idx(a)]; }

private:
    friend FieldSpec make_field(long p, int k);
    FieldSpec() = default;

    long check_idx(long a) const;
    long check_elem(const GfElement& a) const;

    long p_ = 0, q_ = 0;
    int k_ = 0;
    std::vector<int> modulus_;
    std::vector<long> log_;    // index -> discrete log (log_[0] unused)
    std::vector<long> exp_;    // discrete log -> index, length q-1
    std::vector<int> trace_;   // index -> trace residue
};

/// Builds GF(p^k). Non-prime p -> std::invalid_argument; p^k beyond the table
/// capacity -> std::length_error.
FieldSpec make_field(long p, int k);

bool is_prime(long n);
/// Writes p and k when n = p^k for a prime p.
bool is_prime_power(long n, long* p_out = nullptr, int* k_out = nullptr);

}  // namespace ogff::gf
