#ifndef TYPEA_RECOLLEMENT_HPP
#define TYPEA_RECOLLEMENT_HPP

#include <optional>
#include <string>

#include "typea/tstructure.hpp"

namespace typea {

/// The quotient algebra A/Ae_rA = A_{r-1} x A_{n-r} together with its
/// interval embedding into A_n: an interval keeps its coordinates when it
/// lives left of the deleted vertex and moves up by one otherwise.
struct QuotientInfo {
    Algebra algebra;
    int r = 0; // deleted vertex, 1-based
    Interval embed(Interval v) const;
    Interval unembed(Interval iv) const;
    IndecObject embed(IndecObject v) const { return shifted(embed(v.interval()), v.d); }
    IndecObject unembed(IndecObject x) const {
        return shifted(unembed(x.interval()), x.d);
    }
};

/// Recollement of D^b(A_n) generated by an exceptional indecomposable; for
/// the idempotent e_r the generator is P_r and the quotient identification
/// is available.
struct Recollement {
    Algebra ambient;
    IndecObject generator;
    bool idempotent = false;
    int r = 0;                         // valid when idempotent
    std::vector<Interval> ker_jstar;   // Im i_* = generator^perp, by interval
    std::optional<QuotientInfo> quotient;

    bool in_ker_jstar(Interval iv) const;
};

Recollement make_idempotent_recollement(const Algebra& a, int r);
Recollement make_exceptional_recollement(const Algebra& a, IndecObject x);

/// j_! j^* z = direct sum of generator shifts, one for each Hom(G[m], z).
DObject j_bang_j_star(const Recollement& rec, const DObject& z);

/// i_* i^* z = cone(j_! j^* z -> z); returned in quotient coordinates.
/// Idempotent recollements only.
DObject i_upper_star(const Recollement& rec, const DObject& z);

/// Right adjoint image i_* i^! z, found by matching Hom profiles against
/// Im i_* (ambient coordinates). Idempotent recollements only.
DObject i_shriek(const Recollement& rec, const DObject& z);

/// j_! j^* maps the aisle into itself (right t-exactness).
bool is_compatible(const Recollement& rec, const TStructure& t);

/// A t-structure on the corner D^b(K) (an extended integer) and one on the
/// quotient algebra.
struct FactorTStructure {
    ExtInt corner;
    Aisle quotient;
    bool operator==(const FactorTStructure&) const = default;
};

/// BBD induction along an idempotent recollement: the aisle of
/// {Z : j^* Z in the corner aisle, i^* Z in the quotient aisle}.
TStructure induce(const Recollement& rec, const FactorTStructure& f);

/// BBD restriction of a compatible t-structure. Throws CheckError when t is
/// not compatible with rec.
FactorTStructure restrict_t(const Recollement& rec, const TStructure& t);

struct IdempotentChoice {
    int r = 0;
    std::string case_tag; // "0", "1a", "1b", "2a", "2b", "3"
};

/// The constructive three-case choice of a compatible idempotent for a
/// bounded t-structure; the returned r always satisfies is_compatible.
IdempotentChoice find_compatible_idempotent(const Algebra& a, const TStructure& t);

/// The recollement twisted by an autoequivalence: the generator moves, the
/// perpendicular data is transported along.
Recollement twist_recollement(const Algebra& a, AutoEq phi, const Recollement& rec);

/// Predicted simples of the induced heart: i_* of the quotient-heart simples
/// plus the intermediate extension of the corner simple. Verified against
/// heart_of(induce(rec, f)) before returning.
std::vector<IndecObject> simples_of_induced_heart(const Recollement& rec,
                                                  const FactorTStructure& f);

/// Index of a member whose graded perpendicular contains all the others.
int smc_pivot(const Algebra& a, const Smc& s);

/// Minimal s >= 0 with tau^s(x) projective (ignoring shift), and the vertex r
/// of that projective.
std::pair<int, int> pivot_to_projective(const Algebra& a, IndecObject x);

} // namespace typea

#endif
