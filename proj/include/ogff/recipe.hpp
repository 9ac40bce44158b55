#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogff/designs.hpp"
#include "ogff/mubs.hpp"
#include "ogff/packing.hpp"

namespace ogff::recipe {

/// Ingredients for the block-projection assembly: K bases over F^m and an
/// l^2/m-cohesive design on [m]. basis_subset selects bases by index
/// (0-based); empty means all K.
struct RecipeInput {
    mubs::MubFamily mubs;
    designs::BlockDesign design;
    std::vector<int> basis_subset;
    /// Allow assemblies with Kb <= d+1; the result is still a tight fusion
    /// frame, its certificate just cannot claim the orthoplex bound.
    bool override_cardinality = false;
};

/// Assembles the n = K*b block projections, ordered basis-major then
/// block-lexicographic. Self-checks coherence l^2/m, tightness at nl/m = Kr,
/// cross-basis traces l^2/m, and within-basis traces <= l^2/m before
/// returning; a failure throws construction_defect.
packing::Packing assemble_ogff(const RecipeInput& input, double tol = kTraceTol);

/// Block projections of a symmetric design over a single orthonormal basis:
/// an equiangular tight fusion frame with common pairwise trace lambda and
/// frame constant r = l.
packing::Packing etff_from_symmetric(const designs::BlockDesign& design,
                                     const Eigen::MatrixXcd& basis, Field field,
                                     double tol = kTraceTol);

/// Smallest b with b > (d_{F^m}+1) / k_{F^m}.
long min_blocks_required(int m, Field field);

struct CatalogEntry {
    std::string family;
    std::map<std::string, long> params;
    Field field = Field::Complex;
    long m = 0, l = 0, n = 0;
    double coherence_target = 0.0;  // l^2/m
    bool maximal = false;           // n == 2 d_{F^m}
    bool constructible_in_v1 = false;
};

/// Every constructible-or-importable family instance with m <= max_m.
std::vector<CatalogEntry> family_catalog(long max_m);

}  // namespace ogff::recipe
