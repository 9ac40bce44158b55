#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "ogff/common.hpp"

namespace ogff::packing {

/// Rank-l orthogonal projection on F^m. Hermitian and idempotent within
/// tolerance; trace(P) = l.
struct Projection {
    int m = 0;
    int l = 0;
    Eigen::MatrixXcd matrix;
};

/// Sequence of n rank-l projections sharing (field, m, l).
struct Packing {
    Field field = Field::Complex;
    int m = 0;
    int l = 0;
    std::vector<Projection> projections;
    std::string provenance;

    int n() const { return static_cast<int>(projections.size()); }
};

/// Image of a projection under the rank-l traceless map, rescaled to the unit
/// sphere in R^dim.
struct TracelessVector {
    int dim = 0;
    Eigen::VectorXd coords;
    bool unit = true;
};

enum class Classification {
    Etff,
    TightMaximalOgff,
    TightOgff,
    Ogff,
    TightFusionFrame,
    Packing,
};

const char* classification_name(Classification c);
Classification parse_classification(const std::string& name);

struct PackingCertificate {
    Field field = Field::Complex;
    int n = 0, l = 0, m = 0;
    double coherence = 0.0;
    int argmax_j = 0, argmax_jprime = 0;  // 0-based projection indices
    double simplex_bound = 0.0;
    std::optional<double> orthoplex_bound;
    bool orthoplex_eligible = false;  // n > d+1
    bool maximal = false;             // n == 2d
    bool tight = false;
    double frame_constant = 0.0;      // nl/m
    bool equiangular = false;
    int span_rank = 0;
    Classification classification = Classification::Packing;
    double tolerance = kTraceTol;
};

/// Throws std::invalid_argument unless P is Hermitian, idempotent, and of
/// integer trace within tol; used on every import path.
void validate_projection(const Projection& p, double tol = kTraceTol);

/// P = sum of x x* over the given orthonormal columns. Columns whose Gram
/// deviates from the identity by more than tol are rejected, not fixed up.
Projection projection_from_columns(const Eigen::MatrixXcd& cols, double tol = kTraceTol);

/// Block projection: sum of the rank-one projections of the basis columns
/// indexed by the (1-based, distinct) entries of blockJ.
Projection block_projection(const Eigen::MatrixXcd& basis, const std::vector<int>& blockJ);

struct CoherenceResult {
    double mu = 0.0;
    int j = 0, j_prime = 0;  // lexicographically smallest argmax pair
};

/// Exhaustive scan of all n(n-1)/2 pairwise trace inner products.
CoherenceResult coherence(const Packing& p, double tol = kTraceTol);

struct FrameOperatorResult {
    Eigen::MatrixXcd S;
    bool tight = false;
    double frame_constant = 0.0;
    double max_deviation = 0.0;  // entrywise distance from (nl/m) I
};

FrameOperatorResult frame_operator(const Packing& p, double tol = kEntryTol);

struct EquiangularityResult {
    bool equiangular = false;
    std::optional<double> common_value;
    double spread = 0.0;
};

EquiangularityResult is_equiangular(const Packing& p, double tol = kTraceTol);

/// Real dimension of the traceless Hermitian/symmetric matrix space:
/// (m+2)(m-1)/2 over R, m^2 - 1 over C.
int ambient_traceless_dim(int m, Field field);

/// Unnormalized traceless image V(P - (l/m) I) in the fixed vectorization
/// basis: sqrt(2) Re / sqrt(2) Im of the upper off-diagonal entries plus the
/// Helmert coordinates of the diagonal.
Eigen::VectorXd traceless_map(const Projection& p, Field field);

/// Unit-normalized embedding; the squared norm before normalization equals
/// l(m-l)/m. Throws std::domain_error for the degenerate ranks l = 0, l = m.
TracelessVector traceless_embed(const Projection& p, Field field);

enum class RankinRegime { Simplex, Orthoplex, Open };

struct RankinResult {
    RankinRegime regime = RankinRegime::Open;
    std::optional<double> tau;
};

/// Best inner-product bound for n points on the sphere in R^d: -1/(n-1) up to
/// the simplex range n <= d+1, 0 up to the orthoplex range n <= 2d, open
/// (no computable value here) beyond.
RankinResult rankin_tau(long n, long d);

struct BoundResult {
    double simplex = 0.0;
    std::optional<double> orthoplex;
    bool eligible = false;  // n > d+1
    long maximal_n = 0;     // 2d
};

/// Coherence lower bounds for an (n,l)-packing of F^m; the simplex and
/// orthoplex values are cross-checked internally against the traceless
/// lifting of the corresponding sphere-code bounds.
BoundResult chordal_lower_bound(long n, int l, int m, Field field);

/// The (n, m-l)-packing {I - P_j}. The coherence identity
/// mu(complement) = m - 2l + mu(p) is asserted before returning.
Packing spatial_complement(const Packing& p, double tol = kTraceTol);

/// Numerical rank of the concatenated subspace bases; equals m exactly when
/// the packing is a fusion frame.
int span_rank(const Packing& p);

/// Full certification pipeline; always produces a certificate.
PackingCertificate certify(const Packing& p, double tol = kTraceTol);

}  // namespace ogff::packing
