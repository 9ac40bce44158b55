#include "ogff/packing.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ogff::packing {

namespace {

// Real part of tr(P Q), with a guard on the imaginary part (traces of
// Hermitian pairs are real).
double trace_product(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q, double tol) {
    const std::complex<double> t = p.cwiseProduct(q.transpose()).sum();
    if (std::abs(t.imag()) > tol)
        throw construction_defect("trace inner product has imaginary part " + std::to_string(t.imag()));
    return t.real();
}

void check_pair_preconditions(const Packing& p) {
    if (p.n() < 2) throw std::domain_error("pairwise quantities need n >= 2 projections");
}

void check_field_consistency(const Packing& p) {
    if (p.field == Field::Real)
        for (const auto& proj : p.projections)
            if (proj.matrix.imag().cwiseAbs().maxCoeff() > kEntryTol)
                throw std::invalid_argument("real packing holds a projection with imaginary entries");
}

}  // namespace

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Etff: return "ETFF";
        case Classification::TightMaximalOgff: return "tight-maximal-OGFF";
        case Classification::TightOgff: return "tight-OGFF";
        case Classification::Ogff: return "OGFF";
        case Classification::TightFusionFrame: return "tight-fusion-frame";
        case Classification::Packing: return "packing";
    }
    return "packing";
}

Classification parse_classification(const std::string& name) {
    for (Classification c : {Classification::Etff, Classification::TightMaximalOgff,
                             Classification::TightOgff, Classification::Ogff,
                             Classification::TightFusionFrame, Classification::Packing})
        if (name == classification_name(c)) return c;
    throw std::invalid_argument("unknown classification '" + name + "'");
}

void validate_projection(const Projection& p, double tol) {
    if (p.matrix.rows() != p.m || p.matrix.cols() != p.m)
        throw std::invalid_argument("projection matrix is not m x m");
    if (p.l < 0 || p.l > p.m) throw std::invalid_argument("projection rank out of range");
    const double herm = (p.matrix - p.matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol)
        throw std::invalid_argument("projection not Hermitian, deviation " + std::to_string(herm));
    const double idem = (p.matrix * p.matrix - p.matrix).cwiseAbs().maxCoeff();
    if (idem > tol)
        throw std::invalid_argument("projection not idempotent, deviation " + std::to_string(idem));
    const std::complex<double> tr = p.matrix.trace();
    if (std::abs(tr - std::complex<double>(p.l, 0)) > tol * p.m)
        throw std::invalid_argument("projection trace " + std::to_string(tr.real()) +
                                    " does not match rank " + std::to_string(p.l));
}

Projection projection_from_columns(const Eigen::MatrixXcd& cols, double tol) {
    const int m = static_cast<int>(cols.rows());
    const int l = static_cast<int>(cols.cols());
    if (l < 1 || l > m) throw std::invalid_argument("need 1 <= l <= m columns");
    const Eigen::MatrixXcd gram = cols.adjoint() * cols;
    const double dev = (gram - Eigen::MatrixXcd::Identity(l, l)).cwiseAbs().maxCoeff();
    if (dev > tol)
        throw std::invalid_argument("columns not orthonormal, Gram deviation " + std::to_string(dev));
    return Projection{m, l, cols * cols.adjoint()};
}

Projection block_projection(const Eigen::MatrixXcd& basis, const std::vector<int>& blockJ) {
    const int m = static_cast<int>(basis.rows());
    if (basis.cols() != m) throw std::invalid_argument("basis matrix must be square");
    if (blockJ.empty()) throw std::invalid_argument("block must be nonempty");
    std::vector<char> seen(m + 1, 0);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(m, m);
    for (int j : blockJ) {
        if (j < 1 || j > m) throw std::invalid_argument("block index out of range [1, m]");
        if (seen[j]) throw std::invalid_argument("duplicate index in block");
        seen[j] = 1;
        p.noalias() += basis.col(j - 1) * basis.col(j - 1).adjoint();
    }
    return Projection{m, static_cast<int>(blockJ.size()), std::move(p)};
}

CoherenceResult coherence(const Packing& p, double tol) {
    check_pair_preconditions(p);
    CoherenceResult best{-std::numeric_limits<double>::infinity(), 0, 1};
    for (int j = 0; j < p.n(); ++j)
        for (int jp = j + 1; jp < p.n(); ++jp) {
            const double t = trace_product(p.projections[j].matrix, p.projections[jp].matrix, tol);
            if (t > best.mu) best = {t, j, jp};
        }
    return best;
}

FrameOperatorResult frame_operator(const Packing& p, double tol) {
    FrameOperatorResult res;
    res.S = Eigen::MatrixXcd::Zero(p.m, p.m);
    for (const auto& proj : p.projections) res.S += proj.matrix;
    res.frame_constant = static_cast<double>(p.n()) * p.l / p.m;
    res.max_deviation =
        (res.S - res.frame_constant * Eigen::MatrixXcd::Identity(p.m, p.m)).cwiseAbs().maxCoeff();
    res.tight = res.max_deviation < tol;
    return res;
}

EquiangularityResult is_equiangular(const Packing& p, double tol) {
    check_pair_preconditions(p);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    long count = 0;
    for (int j = 0; j < p.n(); ++j)
        for (int jp = j + 1; jp < p.n(); ++jp) {
            const double t = trace_product(p.projections[j].matrix, p.projections[jp].matrix, tol);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
            sum += t;
            ++count;
        }
    EquiangularityResult res;
    res.spread = hi - lo;
    res.equiangular = res.spread < tol;
    if (res.equiangular) res.common_value = sum / static_cast<double>(count);
    return res;
}

int ambient_traceless_dim(int m, Field field) {
    if (m < 1) throw std::invalid_argument("dimension must be >= 1");
    return field == Field::Real ? (m + 2) * (m - 1) / 2 : m * m - 1;
}

Eigen::VectorXd traceless_map(const Projection& p, Field field) {
    const int m = p.m;
    if (field == Field::Real && p.matrix.imag().cwiseAbs().maxCoeff() > kEntryTol)
        throw std::invalid_argument("real embedding requested for a complex-valued projection");

    const Eigen::MatrixXcd a =
        p.matrix - (static_cast<double>(p.l) / m) * Eigen::MatrixXcd::Identity(m, m);
    Eigen::VectorXd v(ambient_traceless_dim(m, field));
    int at = 0;
    const double rt2 = std::numbers::sqrt2;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            v(at++) = rt2 * a(i, j).real();
            if (field == Field::Complex) v(at++) = rt2 * a(i, j).imag();
        }
    // Helmert coordinates of the (trace-free) diagonal
    double prefix = 0.0;
    for (int j = 1; j < m; ++j) {
        prefix += a(j - 1, j - 1).real();
        v(at++) = (prefix - j * a(j, j).real()) / std::sqrt(static_cast<double>(j) * (j + 1));
    }
    return v;
}

TracelessVector traceless_embed(const Projection& p, Field field) {
    if (p.l == 0 || p.l == p.m)
        throw std::domain_error("traceless embedding degenerates for l = 0 and l = m");
    Eigen::VectorXd raw = traceless_map(p, field);
    const double norm2 = raw.squaredNorm();
    const double expected = static_cast<double>(p.l) * (p.m - p.l) / p.m;
    if (std::abs(norm2 - expected) > kTraceTol * std::max(1.0, expected))
        throw construction_defect("embedded norm^2 " + std::to_string(norm2) +
                                  " deviates from l(m-l)/m = " + std::to_string(expected));
    TracelessVector out;
    out.dim = static_cast<int>(raw.size());
    out.coords = raw / std::sqrt(norm2);
    out.unit = true;
    return out;
}

RankinResult rankin_tau(long n, long d) {
    if (n < 2) throw std::domain_error("codes need n >= 2 points");
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (n <= d + 1) return {RankinRegime::Simplex, -1.0 / static_cast<double>(n - 1)};
    if (n <= 2 * d) return {RankinRegime::Orthoplex, 0.0};
    return {RankinRegime::Open, std::nullopt};
}

BoundResult chordal_lower_bound(long n, int l, int m, Field field) {
    if (m < 1 || l < 1 || l > m) throw std::invalid_argument("need 1 <= l <= m");
    if (n < 2) throw std::domain_error("bounds need n >= 2");
    const long d = ambient_traceless_dim(m, field);

    BoundResult res;
    res.simplex = (static_cast<double>(n) * l * l - static_cast<double>(m) * l) /
                  (static_cast<double>(m) * (n - 1));
    res.eligible = n > d + 1;
    if (res.eligible) res.orthoplex = static_cast<double>(l) * l / m;
    res.maximal_n = 2 * d;

    // Both bounds must agree with the traceless lifting of the corresponding
    // sphere-code value: mu = l^2/m + (l(m-l)/m) sigma.
    const double lift_scale = static_cast<double>(l) * (m - l) / m;
    const double base = static_cast<double>(l) * l / m;
    const double simplex_lift = base + lift_scale * (-1.0 / static_cast<double>(n - 1));
    if (std::abs(simplex_lift - res.simplex) > 1e-12 * std::max(1.0, std::abs(res.simplex)))
        throw std::logic_error("simplex bound does not match its traceless lifting");
    if (res.orthoplex && std::abs(*res.orthoplex - base) > 0)
        throw std::logic_error("orthoplex bound does not match its traceless lifting");
    return res;
}

Packing spatial_complement(const Packing& p, double tol) {
    if (p.l >= p.m) throw std::domain_error("spatial complement needs l < m");
    Packing out;
    out.field = p.field;
    out.m = p.m;
    out.l = p.m - p.l;
    out.provenance = p.provenance.empty() ? "complement" : "complement(" + p.provenance + ")";
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(p.m, p.m);
    for (const auto& proj : p.projections)
        out.projections.push_back(Projection{p.m, out.l, eye - proj.matrix});

    if (p.n() >= 2) {
        const double mu = coherence(p, tol).mu;
        const double mu_comp = coherence(out, tol).mu;
        const double expected = p.m - 2.0 * p.l + mu;
        if (std::abs(mu_comp - expected) > tol)
            throw construction_defect("complement coherence identity violated by " +
                                      std::to_string(std::abs(mu_comp - expected)));
    }
    return out;
}

int span_rank(const Packing& p) {
    // concatenated orthonormal bases of the ranges
    Eigen::MatrixXcd cols(p.m, static_cast<Eigen::Index>(p.n()) * p.l);
    Eigen::Index at = 0;
    for (const auto& proj : p.projections) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(proj.matrix);
        // eigenvalues ascending; the top l belong to the range
        cols.middleCols(at, proj.l) = eig.eigenvectors().rightCols(proj.l);
        at += proj.l;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0) return 0;
    const double cutoff = 1e-8 * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

PackingCertificate certify(const Packing& p, double tol) {
    check_pair_preconditions(p);
    check_field_consistency(p);

    PackingCertificate cert;
    cert.field = p.field;
    cert.n = p.n();
    cert.l = p.l;
    cert.m = p.m;
    cert.tolerance = tol;

    const auto coh = coherence(p, tol);
    cert.coherence = coh.mu;
    cert.argmax_j = coh.j;
    cert.argmax_jprime = coh.j_prime;

    const auto bounds = chordal_lower_bound(p.n(), p.l, p.m, p.field);
    cert.simplex_bound = bounds.simplex;
    cert.orthoplex_bound = bounds.orthoplex;
    cert.orthoplex_eligible = bounds.eligible;
    cert.maximal = p.n() == bounds.maximal_n;

    if (cert.coherence < cert.simplex_bound - tol)
        throw construction_defect("coherence below the simplex bound; projections are not valid");
    if (cert.orthoplex_bound && cert.coherence < *cert.orthoplex_bound - tol)
        throw construction_defect("coherence below the orthoplex bound; projections are not valid");

    const auto frame = frame_operator(p, tol);
    cert.tight = frame.tight;
    cert.frame_constant = frame.frame_constant;
    cert.equiangular = is_equiangular(p, tol).equiangular;
    cert.span_rank = span_rank(p);

    const bool at_simplex = std::abs(cert.coherence - cert.simplex_bound) <= tol;
    const bool at_orthoplex =
        cert.orthoplex_bound && std::abs(cert.coherence - *cert.orthoplex_bound) <= tol;

    if (at_simplex && cert.equiangular && cert.tight)
        cert.classification = Classification::Etff;
    else if (at_orthoplex && cert.tight && cert.maximal)
        cert.classification = Classification::TightMaximalOgff;
    else if (at_orthoplex && cert.tight)
        cert.classification = Classification::TightOgff;
    else if (at_orthoplex)
        cert.classification = Classification::Ogff;
    else if (cert.tight)
        cert.classification = Classification::TightFusionFrame;
    else
        cert.classification = Classification::Packing;
    return cert;
}

}  // namespace ogff::packing
