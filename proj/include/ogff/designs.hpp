#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogff/common.hpp"

namespace ogff::designs {

struct Provenance {
    std::string family;
    std::map<std::string, long> params;
    bool operator==(const Provenance&) const = default;
};

/// 1-(m, l, lambda) block design on points 1..m. Canonical form keeps every
/// block sorted and the block list sorted lexicographically, so identical
/// inputs yield byte-identical block lists.
struct BlockDesign {
    int m = 0;
    std::vector<std::vector<int>> blocks;
    /// Partition of block indices (0-based) into parallel classes, when known.
    std::optional<std::vector<std::vector<int>>> parallel_classes;
    std::optional<Provenance> provenance;

    int b() const { return static_cast<int>(blocks.size()); }
    int l() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
};

struct DesignReport {
    int m = 0, l = 0, b = 0, r = 0;
    std::optional<long> lambda2;  // pairwise coverage, when constant
    int cohesion = 0;             // max pairwise block intersection; 0 when b < 2
    bool symmetric = false;
    bool resolvable = false;
    bool affine = false;
    bool bose_tight = false;      // b == m + r - 1
};

/// Sorts blocks internally, sorts the block list, and remaps any parallel
/// classes to the new indices.
BlockDesign canonicalized(BlockDesign d);

/// Full validator: replication, mr = bl, pairwise coverage and
/// r(l-1) = lambda2(m-1), cohesion, symmetry, resolvability, affinity,
/// Bose tightness. Throws not_a_design on non-constant replication and
/// std::invalid_argument on malformed blocks. Resolvability for designs
/// without stored classes uses exact search up to b <= 64; beyond that only
/// stored classes are trusted.
DesignReport validate_design(const BlockDesign& d);

/// Max over distinct block pairs of |J intersect J'|. Requires b >= 2.
int cohesion(const BlockDesign& d);

/// PG(t, q) point-hyperplane design: m = b = (q^{t+1}-1)/(q-1),
/// l = (q^t-1)/(q-1). Symmetric.
BlockDesign gen_point_hyperplane(long q, int t);

/// Hadamard design with parameters (4t-1, 2t-1, t-1) via translates of the
/// quadratic residues of GF(4t-1). Requires 4t-1 to be a prime power congruent
/// to 3 mod 4; other orders enter via file import.
BlockDesign gen_hadamard_design(long t);

/// Menon design (4t^2, 2t^2-t, t^2-t) with t = 2^s, from the -1 positions of
/// the order-4^{s+1} regular Hadamard matrix.
BlockDesign gen_menon_design(int s);

/// Affine hyperplane design AG-style on GF(p)^{t+1}: m = p^{t+1}, l = p^t,
/// one parallel class per projective direction. Achieves Bose's bound
/// b = m + r - 1 with cross-class intersection l^2/m.
BlockDesign gen_affine(long p, int t);

struct FamilyParams {
    long m = 0, l = 0, lambda = 0, b = 0, r = 0;
};

/// Symbolic parameter evaluation for the named families. `a` is q for
/// wallis/wilson_brouwer/point_hyperplane, p for affine, t for hadamard and
/// s for menon (t unused for those two).
FamilyParams family_params(const std::string& family, long a, long t = 0);

}  // namespace ogff::designs
