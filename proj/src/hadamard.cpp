#include "ogff/hadamard.hpp"

#include <stdexcept>

namespace ogff::hadamard {

namespace {

void check_entries(const SignMatrix& m) {
    if (m.entries.rows() != m.entries.cols()) throw std::invalid_argument("sign matrix must be square");
    for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
        for (Eigen::Index j = 0; j < m.entries.cols(); ++j)
            if (m.entries(i, j) != 1 && m.entries(i, j) != -1)
                throw std::invalid_argument("sign matrix entries must be +1 or -1");
}

}  // namespace

SignMatrix sylvester(int k) {
    if (k < 0) throw std::invalid_argument("sylvester order exponent must be >= 0");
    if (k > 12) throw std::length_error("sylvester order 2^k exceeds supported range");
    SignMatrix h{Eigen::MatrixXi::Ones(1, 1)};
    for (int i = 0; i < k; ++i) {
        const int n = h.order();
        Eigen::MatrixXi next(2 * n, 2 * n);
        next.topLeftCorner(n, n) = h.entries;
        next.topRightCorner(n, n) = h.entries;
        next.bottomLeftCorner(n, n) = h.entries;
        next.bottomRightCorner(n, n) = -h.entries;
        h.entries = std::move(next);
    }
    return h;
}

SignMatrix regular_hadamard_power4(int s) {
    if (s < 1) throw std::invalid_argument("regular_hadamard_power4 requires s >= 1");
    if (s > 6) throw std::length_error("order 4^s exceeds supported range");
    SignMatrix seed{Eigen::MatrixXi::Ones(4, 4)};
    seed.entries.diagonal().setConstant(-1);
    SignMatrix h = seed;
    for (int i = 1; i < s; ++i) h = kron(h, seed);
    return h;
}

SignMatrix kron(const SignMatrix& a, const SignMatrix& b) {
    check_entries(a);
    check_entries(b);
    const int na = a.order(), nb = b.order();
    SignMatrix out{Eigen::MatrixXi(na * nb, na * nb)};
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            out.entries.block(i * nb, j * nb, nb, nb) = a.entries(i, j) * b.entries;
    return out;
}

HadamardReport is_hadamard(const SignMatrix& h) {
    check_entries(h);
    const int n = h.order();
    HadamardReport rep;

    const Eigen::MatrixXi gram = h.entries * h.entries.transpose();
    rep.hadamard = gram == Eigen::MatrixXi(Eigen::MatrixXi::Identity(n, n) * n);

    const Eigen::VectorXi row_sums = h.entries.rowwise().sum();
    const Eigen::VectorXi col_sums = h.entries.colwise().sum();
    const int v = row_sums(0);
    rep.regular = (row_sums.array() == v).all() && (col_sums.array() == v).all();
    if (rep.regular) rep.row_sum = v;
    return rep;
}

SignMatrix normalized(const SignMatrix& h) {
    check_entries(h);
    SignMatrix out = h;
    const int n = out.order();
    for (int j = 0; j < n; ++j)
        if (out.entries(0, j) < 0) out.entries.col(j) *= -1;
    for (int i = 0; i < n; ++i)
        if (out.entries(i, 0) < 0) out.entries.row(i) *= -1;
    return out;
}

}  // namespace ogff::hadamard
