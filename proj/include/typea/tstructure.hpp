#ifndef TYPEA_TSTRUCTURE_HPP
#define TYPEA_TSTRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "typea/derived.hpp"
#include "typea/errors.hpp"

namespace typea {

/// Z extended by -inf/+inf; indexes t-structures on a single D^b(K) factor
/// and tail depths of aisles.
struct ExtInt {
    enum Kind { NegInf = -1, Finite = 0, PosInf = 1 };
    Kind kind = Finite;
    int value = 0;

    static ExtInt neg_inf() { return {NegInf, 0}; }
    static ExtInt pos_inf() { return {PosInf, 0}; }
    static ExtInt fin(int v) { return {Finite, v}; }

    bool finite() const { return kind == Finite; }
    bool operator==(const ExtInt&) const = default;
    bool operator<(const ExtInt& o) const {
        if (kind != o.kind) return kind < o.kind;
        return kind == Finite && value < o.value;
    }
};

/// Window of allowed shifts d (inclusive).
struct ShiftWindow {
    int lo = -3;
    int hi = 0;
    bool contains(int d) const { return lo <= d && d <= hi; }
};

/// Aisle of a t-structure, stored as one tail per block plus the finitely
/// many members the tail does not imply.
///
/// Membership semantics per block:
///   tail = +inf   every object of the block.
///   tail = t      every object with d >= -t, plus the listed extras.
///   tail = -inf   the extras act as shift generators: an extra (l,k,d0)
///                 puts (l,k,d) in the aisle for every d >= d0. (Aisles are
///                 closed under [1]; families with unbounded-below shifts
///                 are not representable and never arise from windowed
///                 computations.)
struct Aisle {
    std::vector<ExtInt> tails;
    std::vector<IndecObject> extras;

    static Aisle standard(const Algebra& a, int t = 0);
    static Aisle zero(const Algebra& a);
    static Aisle everything(const Algebra& a);
    bool operator==(const Aisle&) const = default;
};

/// A t-structure is determined by its aisle; the coaisle is always derived
/// as the right Hom-orthogonal.
struct TStructure {
    Aisle aisle;
    bool operator==(const TStructure&) const = default;
};

using Smc = std::vector<IndecObject>;

struct Heart {
    std::vector<IndecObject> indecomposables;
    std::vector<IndecObject> simples;
};

struct ValidationReport {
    bool ok = true;
    std::string axiom;   // first failing axiom, empty when ok
    std::string witness; // human-readable witness
};

bool member(const Algebra& a, const Aisle& aisle, IndecObject x);

/// Least shift d0 with (iv, d) a member for all d >= d0; +inf = never,
/// -inf = every shift (only for tail = +inf blocks).
ExtInt member_threshold(const Algebra& a, const Aisle& aisle, Interval iv);

/// Rebuild an aisle from per-interval thresholds. Throws WindowError when a
/// proper subfamily would need every shift (not representable).
Aisle aisle_from_thresholds(const Algebra& a,
                            const std::vector<std::pair<Interval, ExtInt>>& thresholds);

/// Canonical form: maximal tails, minimal sorted extras.
Aisle canonicalize(const Algebra& a, const Aisle& aisle);

Aisle aisle_shift(const Algebra& a, const Aisle& aisle, int by);
Aisle aisle_tau(const Algebra& a, const Aisle& aisle);
Aisle aisle_tau_inverse(const Algebra& a, const Aisle& aisle);
Aisle aisle_apply(const Algebra& a, AutoEq phi, const Aisle& aisle);

/// All tails finite (the t-structure is bounded exactly in this case).
bool is_bounded(const Aisle& aisle);

/// x in D^{>=1} = right Hom-orthogonal of the aisle.
bool in_coaisle_geq1(const Algebra& a, const Aisle& aisle, IndecObject x);
/// x in D^{>=0}.
bool in_coaisle_geq0(const Algebra& a, const Aisle& aisle, IndecObject x);

/// Axioms of a t-structure on the given window: closure under [1] and
/// extensions, orthogonality against the derived coaisle, and existence of
/// a truncation triangle for every indecomposable in the window.
ValidationReport validate_tstructure(const Algebra& a, const TStructure& t,
                                     ShiftWindow window);

struct Truncation {
    DObject below; // in the aisle
    DObject above; // in D^{>=1}
};

/// Canonical truncation triangle pieces of z, found by bounded search and
/// pinned by Grothendieck class and Hom profiles. Throws WindowError when
/// the search finds no candidate, CheckError when it finds several.
Truncation truncate(const Algebra& a, const TStructure& t, const DObject& z);

/// H^i of z with respect to t, computed from two truncations.
DObject cohomology(const Algebra& a, const TStructure& t, const DObject& z, int i);

Heart heart_of(const Algebra& a, const TStructure& t);

/// Simple-minded collection axioms: negative-shift Hom vanishing, Hom = K
/// exactly on the diagonal, and generation, the latter checked by closing
/// under cones of canonical maps (complete here since Hom spaces are thin)
/// after a determinant-(+-1) prefilter on classes.
bool smc_check(const Algebra& a, const Smc& s);

/// Aisle = extension closure of the non-negative shifts of the collection.
TStructure aisle_from_smc(const Algebra& a, const Smc& s);

/// Simples of the heart, canonically ordered.
Smc recover_smc(const Algebra& a, const TStructure& t);

/// All simple-minded collections with shifts inside the window.
std::vector<Smc> enumerate_smc(const Algebra& a, ShiftWindow window);

/// Every bounded aisle whose heart lies in the window (second, SMC-free
/// enumeration route).
std::vector<Aisle> enumerate_bounded_aisles(const Algebra& a, ShiftWindow window);

/// Every aisle representable with thresholds in the window, degenerate ones
/// included (zero, single-family and whole-category aisles).
std::vector<Aisle> enumerate_aisles_with_degenerate(const Algebra& a, ShiftWindow window);

/// Shift t so the standard aisle sits at tail exactly -1; returns the
/// normalized t-structure and the shift that was applied.
std::pair<TStructure, int> normalize(const Algebra& a, const TStructure& t);

/// Some tau^a [b] carrying t1 to t2, if one exists within the search bounds.
std::optional<AutoEq> orbit_equivalent(const Algebra& a, const TStructure& t1,
                                       const TStructure& t2);

/// Number of connected components of the Auslander-Reiten quiver of
/// D^b(A_2) restricted to the aisle (A_2 only, bounded t only).
int ar_component_count(const Algebra& a, const TStructure& t);

/// t-structures on a product of s copies of D^b(K): tails vectors over the
/// window extended by the two infinite symbols.
std::vector<Aisle> semisimple_tstructures(int s, ShiftWindow window);

/// The product algebra A_1 x ... x A_1 underlying semisimple_tstructures.
Algebra semisimple_algebra(int s);

} // namespace typea

#endif
