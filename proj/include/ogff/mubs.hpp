#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ogff/common.hpp"

namespace ogff::mubs {

/// Family of K pairwise mutually unbiased orthonormal bases of F^m. Each
/// basis is stored as an m x m matrix whose columns are the basis vectors;
/// real families keep zero imaginary parts. Immutable after verified
/// construction.
struct MubFamily {
    Field field = Field::Complex;
    int m = 0;
    std::vector<Eigen::MatrixXcd> bases;
    std::string provenance;

    int K() const { return static_cast<int>(bases.size()); }
};

/// Delsarte-Goethals-Seidel cardinality bound: m+1 bases over C,
/// floor(m/2)+1 over R.
int dgs_bound(int m, Field field);

/// Maximal family of q+1 complex MUBs for prime-power q: the standard basis
/// plus q constructed bases. Odd characteristic uses the trace formula
/// entries q^{-1/2} w_p^{tr(a x^2 + b x)}; even characteristic goes through
/// the Galois ring of characteristic 4 (see gr4 details in the source). The
/// returned family has passed verify_mubs at 1e-9; a failure throws
/// construction_defect instead of returning.
MubFamily gen_complex_mubs(long q);

/// Real MUBs. Built-in only for m = 4 (three bases, the DGS maximum); other
/// powers of four are import-only and raise unsupported_parameters.
MubFamily gen_real_mubs(int m);

struct MubReport {
    bool orthonormal = false;
    bool unbiased = false;
    double max_deviation = 0.0;
    int K = 0;
    bool bound_ok = false;
};

/// Checks the three-case trace table: cross-basis rank-one trace products
/// equal 1/m, same-basis products equal 0 or 1, each within tol; bound_ok
/// means K <= dgs_bound.
MubReport verify_mubs(const MubFamily& fam, double tol = kTraceTol);

}  // namespace ogff::mubs
