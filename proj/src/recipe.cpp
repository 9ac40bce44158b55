#include "ogff/recipe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ogff/galois.hpp"

namespace ogff::recipe {

namespace {

using packing::Packing;
using packing::Projection;

double trace_product(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q) {
    return p.cwiseProduct(q.transpose()).sum().real();
}

long pow_long(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long geom_sum(long base, int from, int to) {
    long s = 0, pw = 1;
    for (int i = 0; i <= to; ++i) {
        if (i >= from) s += pw;
        pw *= base;
    }
    return s;
}

}  // namespace

Packing assemble_ogff(const RecipeInput& input, double tol) {
    const auto& fam = input.mubs;
    const auto report = designs::validate_design(input.design);
    if (report.m != fam.m)
        throw std::invalid_argument("design on [" + std::to_string(report.m) +
                                    "] does not match MUB dimension " + std::to_string(fam.m));
    const int m = fam.m;
    const int l = report.l;
    const int b = report.b;

    // l^2/m-cohesive, integer-exact
    if (report.b >= 2 && static_cast<long>(report.cohesion) * m > static_cast<long>(l) * l)
        throw std::invalid_argument("design cohesion " + std::to_string(report.cohesion) +
                                    " exceeds l^2/m = " + std::to_string(l) + "^2/" + std::to_string(m));

    std::vector<int> selected = input.basis_subset;
    if (selected.empty()) {
        selected.resize(fam.K());
        std::iota(selected.begin(), selected.end(), 0);
    }
    for (int s : selected)
        if (s < 0 || s >= fam.K()) throw std::invalid_argument("basis subset index out of range");
    const int K = static_cast<int>(selected.size());

    const long n = static_cast<long>(K) * b;
    const long d = packing::ambient_traceless_dim(m, fam.field);
    if (n <= d + 1 && !input.override_cardinality)
        throw std::invalid_argument("Kb = " + std::to_string(n) + " <= d+1 = " + std::to_string(d + 1) +
                                    "; pass the cardinality override to assemble anyway");

    Packing pk;
    pk.field = fam.field;
    pk.m = m;
    pk.l = l;
    pk.provenance = "recipe(" + fam.provenance + " x " +
                    (input.design.provenance ? input.design.provenance->family : "design") + ")";
    for (int s : selected)
        for (const auto& blk : input.design.blocks)
            pk.projections.push_back(packing::block_projection(fam.bases[s], blk));

    // Self-check: cross-basis traces sit exactly at l^2/m, within-basis traces
    // stay below it, and the frame operator is Kr * I.
    const double target = static_cast<double>(l) * l / m;
    for (int i = 0; i < pk.n(); ++i)
        for (int j = i + 1; j < pk.n(); ++j) {
            const double t = trace_product(pk.projections[i].matrix, pk.projections[j].matrix);
            if (i / b == j / b) {
                if (t > target + tol)
                    throw construction_defect("within-basis trace " + std::to_string(t) +
                                              " exceeds l^2/m; design is not l^2/m-cohesive");
            } else if (std::abs(t - target) > tol) {
                throw construction_defect("cross-basis trace " + std::to_string(t) +
                                          " deviates from l^2/m = " + std::to_string(target));
            }
        }

    const auto frame = packing::frame_operator(pk, kEntryTol * std::max(1, pk.n()));
    if (!frame.tight)
        throw construction_defect("assembled packing is not tight, deviation " +
                                  std::to_string(frame.max_deviation));
    if (static_cast<long>(K) * report.r * m != n * l)
        throw std::logic_error("frame constant Kr does not equal nl/m");
    return pk;
}

Packing etff_from_symmetric(const designs::BlockDesign& design, const Eigen::MatrixXcd& basis,
                            Field field, double tol) {
    const auto report = designs::validate_design(design);
    if (!report.symmetric)
        throw std::invalid_argument("ETFF construction needs a symmetric design (m = b)");
    if (basis.rows() != report.m || basis.cols() != report.m)
        throw std::invalid_argument("basis dimension does not match the design's point count");
    if (field == Field::Real && basis.imag().cwiseAbs().maxCoeff() > kEntryTol)
        throw std::invalid_argument("real field requested with a complex basis");

    Packing pk;
    pk.field = field;
    pk.m = report.m;
    pk.l = report.l;
    pk.provenance =
        "etff(" + (design.provenance ? design.provenance->family : "design") + ")";
    for (const auto& blk : design.blocks)
        pk.projections.push_back(packing::block_projection(basis, blk));

    if (pk.n() >= 2) {
        const auto equi = packing::is_equiangular(pk, tol);
        if (!equi.equiangular)
            throw construction_defect("symmetric-design packing is not equiangular, spread " +
                                      std::to_string(equi.spread));
        if (report.lambda2 && std::abs(*equi.common_value - static_cast<double>(*report.lambda2)) > tol)
            throw construction_defect("common trace does not equal the design's lambda");
    }
    const auto frame = packing::frame_operator(pk, kEntryTol * std::max(1, pk.n()));
    if (!frame.tight || std::abs(frame.frame_constant - report.r) > tol)
        throw construction_defect("symmetric-design packing is not tight at constant r = l");
    return pk;
}

long min_blocks_required(int m, Field field) {
    if (m < 2) throw std::invalid_argument("min_blocks_required needs m >= 2");
    const long d = packing::ambient_traceless_dim(m, field);
    const long k = mubs::dgs_bound(m, field);
    return (d + 1) / k + 1;  // smallest integer strictly above (d+1)/k
}

std::vector<CatalogEntry> family_catalog(long max_m) {
    if (max_m < 2) throw std::invalid_argument("family_catalog needs max_m >= 2");
    std::vector<CatalogEntry> out;

    auto push = [&out](std::string family, std::map<std::string, long> params, Field field, long m,
                       long l, long K, long b, bool constructible) {
        CatalogEntry e;
        e.family = std::move(family);
        e.params = std::move(params);
        e.field = field;
        e.m = m;
        e.l = l;
        e.n = K * b;
        e.coherence_target = static_cast<double>(l) * l / m;
        const long d = packing::ambient_traceless_dim(static_cast<int>(m), field);
        if (e.n <= d + 1) return;  // cardinality inequality fails; not an OGFF instance
        e.maximal = e.n == 2 * d;
        e.constructible_in_v1 = constructible;
        out.push_back(std::move(e));
    };

    // point-hyperplane: symmetric, complex only, m itself must be a prime power
    for (long q = 2; q <= max_m; ++q) {
        if (!gf::is_prime_power(q)) continue;
        for (int t = 2;; ++t) {
            const long m = geom_sum(q, 0, t);
            if (m > max_m) break;
            const long l = geom_sum(q, 0, t - 1);
            if (!gf::is_prime_power(m) || l <= 1 || l >= m - 1) continue;
            push("point_hyperplane", {{"q", q}, {"t", t}}, Field::Complex, m, l, m + 1, m, true);
        }
    }

    // Hadamard: m = 4t-1 prime power, complex only (m is never a power of 4)
    for (long t = 2; 4 * t - 1 <= max_m; ++t) {
        const long m = 4 * t - 1;
        if (!gf::is_prime_power(m)) continue;
        const long l = 2 * t - 1;
        if (l <= 1 || l >= m - 1) continue;
        push("hadamard", {{"t", t}}, Field::Complex, m, l, m + 1, m, m % 4 == 3);
    }

    // Menon: t = 2^s, m = 4t^2 = 4^{s+1}; complex always, real since m is a
    // power of four (real MUBs are import-only beyond m = 4, hence not v1)
    for (long s = 1;; ++s) {
        const long t = 1L << s;
        const long m = 4 * t * t;
        if (m > max_m) break;
        const long l = 2 * t * t - t;
        push("menon", {{"s", s}}, Field::Complex, m, l, m + 1, m, true);
        push("menon", {{"s", s}}, Field::Real, m, l, m / 2 + 1, m, false);
    }

    // Wallis at q = 2: m = 4^{t+1}, parameters only (no generator in v1)
    for (long t = 1;; ++t) {
        const long m = pow_long(4, static_cast<int>(t) + 1);
        if (m > max_m) break;
        const auto fp = designs::family_params("wallis", 2, t);
        if (fp.m != m) throw std::logic_error("wallis parameter identity failed");
        push("wallis", {{"q", 2}, {"t", t}}, Field::Complex, m, fp.l, m + 1, m, false);
        push("wallis", {{"q", 2}, {"t", t}}, Field::Real, m, fp.l, m / 2 + 1, m, false);
    }

    // Wilson/Brouwer: odd prime power q, complex, parameters only
    for (long q = 3; q <= max_m; q += 2) {
        if (!gf::is_prime_power(q)) continue;
        for (long t = 1;; ++t) {
            const long m = 2 * geom_sum(q, 1, static_cast<int>(t)) + 1;
            if (m > max_m) break;
            if (!gf::is_prime_power(m)) continue;
            const long l = pow_long(q, static_cast<int>(t));
            if (l <= 1 || l >= m - 1) continue;
            push("wilson_brouwer", {{"q", q}, {"t", t}}, Field::Complex, m, l, m + 1, m, false);
        }
    }

    // affine: m = p^{t+1}, resolvable rather than symmetric; complex for every
    // prime p, real for p = 2 when m is a power of four
    for (long p = 2; p <= max_m; ++p) {
        if (!gf::is_prime(p)) continue;
        for (int t = 1;; ++t) {
            const long m = pow_long(p, t + 1);
            if (m > max_m || m <= 0) break;
            const long l = m / p;
            const long b = geom_sum(p, 1, t + 1);
            push("affine", {{"p", p}, {"t", t}}, Field::Complex, m, l, m + 1, b, true);
            if (p == 2 && (t % 2 == 1))
                push("affine", {{"p", p}, {"t", t}}, Field::Real, m, l, m / 2 + 1, b, m == 4);
        }
    }

    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tie(a.m, a.family, a.field, a.n) < std::tie(b.m, b.family, b.field, b.n);
    });
    return out;
}

}  // namespace ogff::recipe
