#include "ogff/designs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ogff/galois.hpp"
#include "ogff/hadamard.hpp"

namespace ogff::designs {

namespace {

// Limit for the exact resolvability search on imported designs.
constexpr int kResolvabilitySearchLimit = 64;

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

void check_structure(const BlockDesign& d) {
    if (d.m < 1) throw std::invalid_argument("design needs at least one point");
    if (d.blocks.empty()) throw std::invalid_argument("design has no blocks");
    const size_t l = d.blocks.front().size();
    if (l < 1 || l > static_cast<size_t>(d.m))
        throw std::invalid_argument("block size must satisfy 1 <= l <= m");
    for (const auto& blk : d.blocks) {
        if (blk.size() != l) throw std::invalid_argument("blocks must all have the same size");
        for (size_t i = 0; i < blk.size(); ++i) {
            if (blk[i] < 1 || blk[i] > d.m) throw std::invalid_argument("block point out of range [1, m]");
            if (i > 0 && blk[i] <= blk[i - 1])
                throw std::invalid_argument("blocks must be sorted with distinct points (canonicalize first)");
        }
    }
    for (size_t i = 1; i < d.blocks.size(); ++i)
        if (d.blocks[i] == d.blocks[i - 1]) throw std::invalid_argument("blocks must be pairwise distinct");
}

void check_classes(const BlockDesign& d, const std::vector<std::vector<int>>& classes) {
    std::vector<char> used(d.blocks.size(), 0);
    for (const auto& cls : classes) {
        std::vector<char> covered(d.m + 1, 0);
        for (int idx : cls) {
            if (idx < 0 || idx >= d.b()) throw std::invalid_argument("parallel class references unknown block");
            if (used[idx]) throw std::invalid_argument("block appears in two parallel classes");
            used[idx] = 1;
            for (int pt : d.blocks[idx]) {
                if (covered[pt]) throw std::invalid_argument("parallel class blocks are not disjoint");
                covered[pt] = 1;
            }
        }
        for (int pt = 1; pt <= d.m; ++pt)
            if (!covered[pt]) throw std::invalid_argument("parallel class does not cover every point");
    }
    if (!std::all_of(used.begin(), used.end(), [](char c) { return c; }))
        throw std::invalid_argument("parallel classes do not partition the block list");
}

// Exact search for a resolution: repeatedly complete the class containing the
// lowest remaining block by exact cover of the point set.
bool extend_class(const BlockDesign& d, const std::vector<int>& remaining, std::vector<char>& taken,
                  std::vector<char>& covered, std::vector<int>& cls, int needed,
                  std::vector<std::vector<int>>& classes_out, std::vector<int>& rest_out);

bool resolve_rest(const BlockDesign& d, const std::vector<int>& remaining,
                  std::vector<std::vector<int>>& classes_out) {
    if (remaining.empty()) return true;
    std::vector<char> taken(d.blocks.size(), 0);
    std::vector<char> covered(d.m + 1, 0);
    std::vector<int> cls;
    const int per_class = d.m / d.l();
    std::vector<int> rest;
    return extend_class(d, remaining, taken, covered, cls, per_class, classes_out, rest);
}

bool extend_class(const BlockDesign& d, const std::vector<int>& remaining, std::vector<char>& taken,
                  std::vector<char>& covered, std::vector<int>& cls, int needed,
                  std::vector<std::vector<int>>& classes_out, std::vector<int>& rest_out) {
    if (static_cast<int>(cls.size()) == needed) {
        std::vector<int> rest;
        for (int idx : remaining)
            if (!taken[idx]) rest.push_back(idx);
        std::vector<std::vector<int>> sub;
        if (resolve_rest(d, rest, sub)) {
            classes_out.push_back(cls);
            classes_out.insert(classes_out.end(), sub.begin(), sub.end());
            rest_out = rest;
            return true;
        }
        return false;
    }
    // lowest uncovered point anchors the next block of this class
    int anchor = 0;
    for (int pt = 1; pt <= d.m; ++pt)
        if (!covered[pt]) {
            anchor = pt;
            break;
        }
    for (int idx : remaining) {
        if (taken[idx]) continue;
        const auto& blk = d.blocks[idx];
        if (!std::binary_search(blk.begin(), blk.end(), anchor)) continue;
        if (std::any_of(blk.begin(), blk.end(), [&](int pt) { return covered[pt]; })) continue;
        taken[idx] = 1;
        for (int pt : blk) covered[pt] = 1;
        cls.push_back(idx);
        if (extend_class(d, remaining, taken, covered, cls, needed, classes_out, rest_out)) return true;
        cls.pop_back();
        for (int pt : blk) covered[pt] = 0;
        taken[idx] = 0;
    }
    return false;
}

std::optional<std::vector<std::vector<int>>> find_resolution(const BlockDesign& d) {
    const int l = d.l();
    if (d.m % l != 0) return std::nullopt;
    const int per_class = d.m / l;
    if (d.b() % per_class != 0) return std::nullopt;
    std::vector<int> all(d.blocks.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> classes;
    if (!resolve_rest(d, all, classes)) return std::nullopt;
    return classes;
}

bool constant_cross_class_intersection(const BlockDesign& d,
                                       const std::vector<std::vector<int>>& classes) {
    if (classes.size() < 2) return false;
    std::optional<int> common;
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b = a + 1; b < classes.size(); ++b)
            for (int i : classes[a])
                for (int j : classes[b]) {
                    const int s = intersection_size(d.blocks[i], d.blocks[j]);
                    if (!common) common = s;
                    if (s != *common) return false;
                }
    return common.has_value();
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

BlockDesign canonicalized(BlockDesign d) {
    for (auto& blk : d.blocks) std::sort(blk.begin(), blk.end());
    if (!d.parallel_classes) {
        std::sort(d.blocks.begin(), d.blocks.end());
        return d;
    }
    // sort blocks while tracking where each old index lands
    std::vector<int> order(d.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.blocks[a] < d.blocks[b]; });
    std::vector<int> new_index(d.blocks.size());
    std::vector<std::vector<int>> sorted_blocks(d.blocks.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        new_index[order[pos]] = static_cast<int>(pos);
        sorted_blocks[pos] = std::move(d.blocks[order[pos]]);
    }
    d.blocks = std::move(sorted_blocks);
    for (auto& cls : *d.parallel_classes) {
        for (int& idx : cls) idx = new_index[idx];
        std::sort(cls.begin(), cls.end());
    }
    std::sort(d.parallel_classes->begin(), d.parallel_classes->end());
    return d;
}

int cohesion(const BlockDesign& d) {
    if (d.b() < 2) throw std::domain_error("cohesion needs at least two blocks");
    int best = 0;
    for (int i = 0; i < d.b(); ++i)
        for (int j = i + 1; j < d.b(); ++j)
            best = std::max(best, intersection_size(d.blocks[i], d.blocks[j]));
    return best;
}

DesignReport validate_design(const BlockDesign& d) {
    check_structure(d);

    DesignReport rep;
    rep.m = d.m;
    rep.b = d.b();
    rep.l = d.l();

    std::vector<int> replication(d.m + 1, 0);
    for (const auto& blk : d.blocks)
        for (int pt : blk) ++replication[pt];
    rep.r = replication[1];
    for (int pt = 1; pt <= d.m; ++pt)
        if (replication[pt] != rep.r)
            throw not_a_design("not a 1-design: point " + std::to_string(pt) + " has replication " +
                               std::to_string(replication[pt]) + " != " + std::to_string(rep.r));
    if (static_cast<long>(rep.m) * rep.r != static_cast<long>(rep.b) * rep.l)
        throw std::logic_error("mr != bl despite constant replication");

    // pairwise coverage
    if (d.m >= 2) {
        std::vector<long> pair_count(static_cast<size_t>(d.m) * d.m, 0);
        for (const auto& blk : d.blocks)
            for (size_t i = 0; i < blk.size(); ++i)
                for (size_t j = i + 1; j < blk.size(); ++j)
                    ++pair_count[static_cast<size_t>(blk[i] - 1) * d.m + (blk[j] - 1)];
        std::optional<long> lambda2 = pair_count[1];  // pair (1,2)
        for (int a = 1; a <= d.m && lambda2; ++a)
            for (int b = a + 1; b <= d.m; ++b)
                if (pair_count[static_cast<size_t>(a - 1) * d.m + (b - 1)] != *lambda2) {
                    lambda2.reset();
                    break;
                }
        rep.lambda2 = lambda2;
        if (lambda2 &&
            static_cast<long>(rep.r) * (rep.l - 1) != *lambda2 * (rep.m - 1))
            throw construction_defect("2-design identity r(l-1) = lambda2(m-1) violated");
    }

    rep.cohesion = rep.b >= 2 ? cohesion(d) : 0;
    rep.symmetric = rep.m == rep.b;

    std::optional<std::vector<std::vector<int>>> classes;
    if (d.parallel_classes) {
        check_classes(d, *d.parallel_classes);
        classes = d.parallel_classes;
    } else if (rep.b <= kResolvabilitySearchLimit) {
        classes = find_resolution(d);
    }
    rep.resolvable = classes.has_value();
    rep.affine = classes && constant_cross_class_intersection(d, *classes);
    rep.bose_tight = rep.b == rep.m + rep.r - 1;
    return rep;
}

BlockDesign gen_point_hyperplane(long q, int t) {
    long p = 0;
    int kk = 0;
    if (!gf::is_prime_power(q, &p, &kk))
        throw std::invalid_argument("point-hyperplane design needs a prime power q");
    if (t < 2) throw std::invalid_argument("point-hyperplane design needs t >= 2");
    const auto field = gf::make_field(p, kk);

    const int dim = t + 1;
    // projective points: first nonzero coordinate equals 1, coordinates
    // enumerated most-significant-first
    std::vector<std::vector<long>> points;
    long total = 1;
    for (int i = 0; i < dim; ++i) total *= q;
    for (long code = 1; code < total; ++code) {
        std::vector<long> v(dim);
        long rest = code;
        for (int i = dim - 1; i >= 0; --i) {
            v[i] = rest % q;
            rest /= q;
        }
        long first = 0;
        for (int i = 0; i < dim; ++i)
            if (v[i] != 0) {
                first = v[i];
                break;
            }
        if (first == 1) points.push_back(std::move(v));
    }
    const int m = static_cast<int>(points.size());

    BlockDesign d;
    d.m = m;
    for (const auto& a : points) {
        std::vector<int> blk;
        for (int x = 0; x < m; ++x) {
            long dot = 0;
            for (int i = 0; i < dim; ++i) dot = field.add_idx(dot, field.mul_idx(a[i], points[x][i]));
            if (dot == 0) blk.push_back(x + 1);
        }
        d.blocks.push_back(std::move(blk));
    }
    d.provenance = Provenance{"point_hyperplane", {{"q", q}, {"t", t}}};
    return canonicalized(std::move(d));
}

BlockDesign gen_hadamard_design(long t) {
    if (t < 1) throw std::invalid_argument("hadamard design needs t >= 1");
    const long m = 4 * t - 1;
    long p = 0;
    int kk = 0;
    if (!gf::is_prime_power(m, &p, &kk) || m % 4 != 3)
        throw unsupported_parameters("4t-1 = " + std::to_string(m) +
                                     " is not a prime power congruent to 3 mod 4; import the design instead");
    const auto field = gf::make_field(p, kk);

    // nonzero quadratic residues
    std::set<long> residues;
    for (long x = 1; x < m; ++x) residues.insert(field.mul_idx(x, x));

    BlockDesign d;
    d.m = static_cast<int>(m);
    for (long a = 0; a < m; ++a) {
        std::vector<int> blk;
        for (long x : residues) blk.push_back(static_cast<int>(field.add_idx(x, a)) + 1);
        d.blocks.push_back(std::move(blk));
    }
    d.provenance = Provenance{"hadamard", {{"t", t}}};
    return canonicalized(std::move(d));
}

BlockDesign gen_menon_design(int s) {
    if (s < 1) throw std::invalid_argument("menon design needs s >= 1");
    const auto h = hadamard::regular_hadamard_power4(s + 1);
    const int m = h.order();

    BlockDesign d;
    d.m = m;
    for (int i = 0; i < m; ++i) {
        std::vector<int> blk;
        for (int j = 0; j < m; ++j)
            if (h.entries(i, j) == -1) blk.push_back(j + 1);
        d.blocks.push_back(std::move(blk));
    }
    d.provenance = Provenance{"menon", {{"s", s}}};
    return canonicalized(std::move(d));
}

BlockDesign gen_affine(long p, int t) {
    if (!gf::is_prime(p)) throw std::invalid_argument("affine design needs a prime p");
    if (t < 1) throw std::invalid_argument("affine design needs t >= 1");
    const int dim = t + 1;
    long m = 1;
    for (int i = 0; i < dim; ++i) {
        if (m > (1L << 20) / p) throw std::length_error("p^{t+1} exceeds supported range");
        m *= p;
    }

    // point label = base-p encoding of the coordinate vector, most significant
    // coordinate first, plus one
    auto coord = [&](long code, int i) {
        for (int j = dim - 1; j > i; --j) code /= p;
        return code % p;
    };

    // projective directions, same canonical form as gen_point_hyperplane
    std::vector<std::vector<long>> directions;
    for (long code = 1; code < m; ++code) {
        std::vector<long> v(dim);
        long rest = code;
        for (int i = dim - 1; i >= 0; --i) {
            v[i] = rest % p;
            rest /= p;
        }
        long first = 0;
        for (int i = 0; i < dim; ++i)
            if (v[i] != 0) {
                first = v[i];
                break;
            }
        if (first == 1) directions.push_back(std::move(v));
    }

    BlockDesign d;
    d.m = static_cast<int>(m);
    std::vector<std::vector<int>> classes;
    for (const auto& a : directions) {
        std::vector<std::vector<int>> buckets(p);
        for (long x = 0; x < m; ++x) {
            long dot = 0;
            for (int i = 0; i < dim; ++i) dot = (dot + a[i] * coord(x, i)) % p;
            buckets[dot].push_back(static_cast<int>(x) + 1);
        }
        std::vector<int> cls;
        for (auto& blk : buckets) {
            cls.push_back(d.b());
            d.blocks.push_back(std::move(blk));
        }
        classes.push_back(std::move(cls));
    }
    d.parallel_classes = std::move(classes);
    d.provenance = Provenance{"affine", {{"p", p}, {"t", t}}};
    return canonicalized(std::move(d));
}

FamilyParams family_params(const std::string& family, long a, long t) {
    FamilyParams fp;
    if (family == "wallis") {
        if (!gf::is_prime_power(a) || t < 1)
            throw std::invalid_argument("wallis needs a prime power q and t >= 1");
        fp.m = 1;
        for (int i = 0; i < t + 1; ++i) fp.m *= a;                    // q^{t+1}
        fp.m *= geom_sum(a, 1, static_cast<int>(t)) + 2;              // q^t+...+q+2
        long qt = 1;
        for (int i = 0; i < t; ++i) qt *= a;
        fp.l = qt * geom_sum(a, 0, static_cast<int>(t));
        fp.lambda = qt * geom_sum(a, 0, static_cast<int>(t) - 1);
        fp.b = fp.m;
        fp.r = fp.l;
    } else if (family == "wilson_brouwer") {
        if (!gf::is_prime_power(a) || a % 2 == 0 || t < 1)
            throw std::invalid_argument("wilson_brouwer needs an odd prime power q and t >= 1");
        fp.m = 2 * geom_sum(a, 1, static_cast<int>(t)) + 1;
        long qt = 1;
        for (int i = 0; i < t; ++i) qt *= a;
        fp.l = qt;
        fp.lambda = (qt / a) * (a - 1) / 2;
        fp.b = fp.m;
        fp.r = fp.l;
    } else if (family == "point_hyperplane") {
        if (!gf::is_prime_power(a) || t < 2)
            throw std::invalid_argument("point_hyperplane needs a prime power q and t >= 2");
        fp.m = geom_sum(a, 0, static_cast<int>(t));
        fp.l = geom_sum(a, 0, static_cast<int>(t) - 1);
        fp.lambda = geom_sum(a, 0, static_cast<int>(t) - 2);
        fp.b = fp.m;
        fp.r = fp.l;
    } else if (family == "hadamard") {
        if (a < 1) throw std::invalid_argument("hadamard needs t >= 1");
        fp.m = 4 * a - 1;
        fp.l = 2 * a - 1;
        fp.lambda = a - 1;
        fp.b = fp.m;
        fp.r = fp.l;
    } else if (family == "menon") {
        if (a < 1) throw std::invalid_argument("menon needs s >= 1");
        const long tt = 1L << a;
        fp.m = 4 * tt * tt;
        fp.l = 2 * tt * tt - tt;
        fp.lambda = tt * tt - tt;
        fp.b = fp.m;
        fp.r = fp.l;
    } else if (family == "affine") {
        if (!gf::is_prime(a) || t < 1) throw std::invalid_argument("affine needs a prime p and t >= 1");
        fp.m = 1;
        for (int i = 0; i < t + 1; ++i) fp.m *= a;
        fp.l = fp.m / a;
        fp.lambda = geom_sum(a, 0, static_cast<int>(t) - 1);  // (p^t-1)/(p-1)
        fp.r = geom_sum(a, 0, static_cast<int>(t));
        fp.b = geom_sum(a, 1, static_cast<int>(t) + 1);
    } else {
        throw std::invalid_argument("unknown design family '" + family + "'");
    }
    return fp;
}

}  // namespace ogff::designs
