#ifndef TYPEA_QUIVER_HPP
#define TYPEA_QUIVER_HPP

#include <compare>
#include <map>
#include <vector>

#include "typea/matrix.hpp"

namespace typea {

/// A product of linearly oriented type-A path algebras. Vertices are the
/// integers 0..n-1 (0-based); each block is a contiguous run of vertices
/// carrying the arrows 1 -> 2 -> ... -> size inside the block, with no
/// arrows between blocks. A plain A_n has a single block.
struct Block {
    int offset = 0;
    int size = 0;
    auto operator<=>(const Block&) const = default;
};

struct Interval; // fwd

struct Algebra {
    int n = 0;
    std::vector<Block> blocks;

    static Algebra linear(int n);

    /// Index of the block containing vertex range [l, k), or -1.
    int block_containing(int l, int k) const;
    bool valid_interval(int l, int k) const;

    /// All intervals (l, k), 0 <= l < k, lying inside a block, in
    /// lexicographic order.
    std::vector<Interval> intervals() const;

    bool operator==(const Algebra&) const = default;
};

/// The indecomposable module M_{l,k} presented by 0 -> P_l -> P_k -> M_{l,k} -> 0
/// (inside its block; P_0 = 0, P_k = M_{0,k}, S_k = M_{k-1,k}).
struct Interval {
    int l = 0;
    int k = 0;
    auto operator<=>(const Interval&) const = default;
};

inline Interval projective(int k) { return {0, k}; }
inline Interval simple(int k) { return {k - 1, k}; }

/// Concrete quiver representation supporting an Algebra: one space per
/// vertex, maps[a] : V_{a+1} -> V_a carrying the action of arrow a -> a+1
/// on right modules.
struct Representation {
    std::vector<int> dims;
    std::vector<Matrix> maps;

    int total_dim() const;
    static Representation zero(const Algebra& a);
};

struct ModuleMap {
    Representation source;
    Representation target;
    std::vector<Matrix> components; // one per vertex, shape target x source

    /// True when every arrow square commutes exactly.
    bool commutes() const;
};

Representation realize(const Algebra& a, Interval m);
Representation direct_sum(const Representation& x, const Representation& y);
std::vector<int> dim_vector(const Algebra& a, Interval m);

/// dim Hom(x, y), computed as the kernel dimension of the commuting-square
/// linear system over realize(x), realize(y). This is the oracle route; the
/// closed-form predicate lives with the derived-category layer.
int hom_dim(const Algebra& a, Interval x, Interval y);
int hom_dim(const Algebra& a, const Representation& x, const Representation& y);

/// Basis of Hom(x, y) as explicit ModuleMaps.
std::vector<ModuleMap> hom_basis(const Algebra& a, const Representation& x,
                                 const Representation& y);

/// dim Ext^1(x, y) via the presentation: coker(Hom(P_k, y) -> Hom(P_l, y)).
int ext1_dim(const Algebra& a, Interval x, Interval y);

/// The nonzero map x -> y, unique up to scalar (requires hom_dim == 1).
ModuleMap canonical_map(const Algebra& a, Interval x, Interval y);

/// Vertexwise kernel and cokernel with the induced arrow maps.
std::pair<Representation, Representation> kernel_coker(const ModuleMap& f);

/// Middle term of a nonsplit short exact sequence 0 -> y -> E -> x -> 0,
/// realized as coker(P_l -> P_k (+) y). class_index must be < ext1_dim(x,y).
Representation pushout_extension(const Algebra& a, Interval x, Interval y,
                                 int class_index = 0);

/// Krull-Schmidt decomposition into intervals, recovered from Hom counts
/// against every interval and re-verified. Throws on inconsistency.
std::map<Interval, int> decompose(const Algebra& a, const Representation& r);

} // namespace typea

#endif
