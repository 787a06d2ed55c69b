#ifndef TYPEA_DERIVED_HPP
#define TYPEA_DERIVED_HPP

#include <compare>
#include <vector>

#include "typea/quiver.hpp"

namespace typea {

/// The shifted interval M_{l,k}[d]: a stalk complex with cohomology M_{l,k}
/// placed so that the standard aisle contains M[d] exactly when d >= 0.
struct IndecObject {
    int l = 0;
    int k = 0;
    int d = 0;
    Interval interval() const { return {l, k}; }
    auto operator<=>(const IndecObject& o) const {
        return std::tie(d, l, k) <=> std::tie(o.d, o.l, o.k);
    }
    bool operator==(const IndecObject&) const = default;
};

inline IndecObject shifted(Interval m, int d) { return {m.l, m.k, d}; }
inline IndecObject shift(IndecObject x, int by) { return {x.l, x.k, x.d + by}; }

/// A general object: a finite multiset of indecomposable summands, kept in
/// canonical sorted order. Empty = zero object.
struct DObject {
    std::vector<IndecObject> summands;

    DObject() = default;
    explicit DObject(std::vector<IndecObject> s);
    static DObject of(IndecObject x) { return DObject({x}); }

    bool is_zero() const { return summands.empty(); }
    DObject shifted_by(int d) const;
    DObject plus(const DObject& o) const;
    bool operator==(const DObject&) const = default;
};

/// Phi = tau^a compose [b].
struct AutoEq {
    int a = 0;
    int b = 0;
};

struct GrothClass {
    std::vector<long long> coords;
    bool operator==(const GrothClass&) const = default;
    bool is_zero() const;
};

/// Closed-form graded Hom predicates (the hammock combinatorics). The oracle
/// route through realize() is kept separate so the two can be compared.
int hom_formula(const Algebra& a, Interval x, Interval y);
int ext1_formula(const Algebra& a, Interval x, Interval y);

/// dim Hom(x, y[0]) in the derived category, closed form.
int dhom_dim(const Algebra& a, IndecObject x, IndecObject y);
/// Same value computed through the linear-algebra oracle.
int dhom_dim_oracle(const Algebra& a, IndecObject x, IndecObject y);

int dhom_dim(const Algebra& a, const DObject& x, const DObject& y);
int dhom_dim(const Algebra& a, IndecObject x, const DObject& y);
int dhom_dim(const Algebra& a, const DObject& x, IndecObject y);

/// Cone of the canonical nonzero map x -> y. Requires dhom_dim(x, y) == 1.
DObject cone_of_map(const Algebra& a, IndecObject x, IndecObject y);

/// The injective indecomposable I_j = nu(P_j), j = 1..n (single block only).
Interval injective_at(const Algebra& a, int j);

/// Auslander-Reiten translate, computed from the Nakayama functor on the
/// projective presentation and decomposed; a bijection on IndecObjects.
IndecObject tau(const Algebra& a, IndecObject x);
IndecObject tau_inverse(const Algebra& a, IndecObject x);

IndecObject apply_autoeq(const Algebra& a, AutoEq phi, IndecObject x);
DObject apply_autoeq(const Algebra& a, AutoEq phi, const DObject& z);

GrothClass groth_class(const Algebra& a, const DObject& z);
GrothClass groth_class(const Algebra& a, IndecObject x);

} // namespace typea

#endif
