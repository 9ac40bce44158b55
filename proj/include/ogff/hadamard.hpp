#pragma once

#include <Eigen/Core>
#include <optional>

#include "ogff/common.hpp"

namespace ogff::hadamard {

/// Square matrix with entries restricted to {+1, -1}. Integer arithmetic
/// throughout; exactness is free at these orders.
struct SignMatrix {
    Eigen::MatrixXi entries;
    int order() const { return static_cast<int>(entries.rows()); }
};

/// Order-2^k Sylvester matrix: H(0) = [1], H(k) = [[H, H], [H, -H]].
SignMatrix sylvester(int k);

/// Order-4^s regular Hadamard matrix with every row and column sum +2^s,
/// built as the s-fold tensor power of the order-4 seed with -1 on the
/// diagonal and +1 off it.
SignMatrix regular_hadamard_power4(int s);

/// Kronecker product; preserves the Hadamard property and multiplies row sums.
SignMatrix kron(const SignMatrix& a, const SignMatrix& b);

struct HadamardReport {
    bool hadamard = false;            // H H^T == order * I, exactly
    bool regular = false;             // all row and column sums share one value
    std::optional<long> row_sum;      // the common value when regular
};

/// Report-style validator for constructed or imported matrices.
HadamardReport is_hadamard(const SignMatrix& h);

/// Sign-normalized copy: first row and column made all +1 by negating rows
/// and columns. Constructions themselves are left un-normalized.
SignMatrix normalized(const SignMatrix& h);

}  // namespace ogff::hadamard
