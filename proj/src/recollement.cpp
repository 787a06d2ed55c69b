#include "typea/recollement.hpp"

#include <algorithm>
#include <set>

namespace typea {

namespace {

void require_linear(const Algebra& a, const char* who) {
    if (a.blocks.size() != 1 || a.blocks[0].offset != 0)
        throw std::invalid_argument(std::string(who) + ": ambient algebra must be A_n");
}

std::vector<Interval> perpendicular_scan(const Algebra& a, IndecObject x) {
    std::vector<Interval> perp;
    for (Interval iv : a.intervals()) {
        bool clean = true;
        for (int m = -2; m <= 2 && clean; ++m)
            if (dhom_dim(a, x, shifted(iv, x.d + m)) != 0) clean = false;
        if (clean) perp.push_back(iv);
    }
    return perp;
}

} // namespace

Interval QuotientInfo::embed(Interval v) const {
    if (v.k <= r - 1) return v;
    return {v.l + 1, v.k + 1};
}

Interval QuotientInfo::unembed(Interval iv) const {
    if (iv.k < r) return iv;
    if (iv.l >= r) return {iv.l - 1, iv.k - 1};
    throw std::invalid_argument("unembed: interval not in the image of i_*");
}

bool Recollement::in_ker_jstar(Interval iv) const {
    return std::find(ker_jstar.begin(), ker_jstar.end(), iv) != ker_jstar.end();
}

Recollement make_idempotent_recollement(const Algebra& a, int r) {
    require_linear(a, "make_idempotent_recollement");
    if (r < 1 || r > a.n)
        throw std::invalid_argument("make_idempotent_recollement: vertex out of range");
    Recollement rec;
    rec.ambient = a;
    rec.generator = shifted(projective(r), 0);
    rec.idempotent = true;
    rec.r = r;
    for (Interval iv : a.intervals())
        if (iv.k < r || iv.l >= r) rec.ker_jstar.push_back(iv);

    QuotientInfo q;
    q.r = r;
    q.algebra.n = a.n - 1;
    if (r - 1 > 0) q.algebra.blocks.push_back({0, r - 1});
    if (a.n - r > 0) q.algebra.blocks.push_back({r - 1, a.n - r});
    rec.quotient = q;
    return rec;
}

Recollement make_exceptional_recollement(const Algebra& a, IndecObject x) {
    require_linear(a, "make_exceptional_recollement");
    if (dhom_dim(a, x, shift(x, 1)) != 0)
        throw std::invalid_argument("make_exceptional_recollement: generator not exceptional");
    if (dhom_dim(a, x, x) != 1)
        throw std::invalid_argument("make_exceptional_recollement: End is not the base field");
    Recollement rec;
    rec.ambient = a;
    rec.generator = x;
    rec.ker_jstar = perpendicular_scan(a, x);
    // the perpendicular category carries a rank-(n-1) Grothendieck group
    Matrix classes(a.n, static_cast<int>(rec.ker_jstar.size()));
    for (size_t j = 0; j < rec.ker_jstar.size(); ++j)
        for (int v = rec.ker_jstar[j].l; v < rec.ker_jstar[j].k; ++v)
            classes.at(v, static_cast<int>(j)) = 1;
    if (rank(classes) != a.n - 1)
        throw CheckError("make_exceptional_recollement: perpendicular category has "
                         "unexpected rank");
    if (x.d == 0 && x.l == 0) {
        Recollement idem = make_idempotent_recollement(a, x.k);
        if (idem.ker_jstar != rec.ker_jstar)
            throw CheckError("make_exceptional_recollement: disagrees with the "
                             "idempotent construction");
        return idem;
    }
    return rec;
}

DObject j_bang_j_star(const Recollement& rec, const DObject& z) {
    const Algebra& a = rec.ambient;
    DObject out;
    for (IndecObject s : z.summands) {
        // at most one m contributes: the hom and ext conditions on an
        // interval pair exclude each other
        for (int m = s.d - 1; m <= s.d; ++m) {
            IndecObject g = rec.generator;
            g.d = m;
            int c = dhom_dim(a, g, s);
            for (int i = 0; i < c; ++i) out.summands.push_back(g);
        }
    }
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

DObject i_upper_star(const Recollement& rec, const DObject& z) {
    if (!rec.idempotent || !rec.quotient)
        throw std::invalid_argument("i_upper_star: idempotent recollement expected");
    const Algebra& a = rec.ambient;
    const QuotientInfo& q = *rec.quotient;
    DObject out;
    for (IndecObject s : z.summands) {
        if (rec.in_ker_jstar(s.interval())) {
            out.summands.push_back(q.unembed(s));
            continue;
        }
        // cone of the counit j_! j^* s -> s; with one generator copy the map
        // is the canonical one
        IndecObject g = rec.generator;
        g.d = s.d;
        if (dhom_dim(a, g, s) != 1)
            throw CheckError("i_upper_star: counit is not canonical");
        for (IndecObject c : cone_of_map(a, g, s).summands) {
            if (!rec.in_ker_jstar(c.interval()))
                throw CheckError("i_upper_star: cone left Im i_*");
            out.summands.push_back(q.unembed(c));
        }
    }
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

DObject i_shriek(const Recollement& rec, const DObject& z) {
    if (!rec.idempotent || !rec.quotient)
        throw std::invalid_argument("i_shriek: idempotent recollement expected");
    const Algebra& a = rec.ambient;

    int zlo = 0, zhi = 0;
    if (!z.is_zero()) {
        zlo = z.summands.front().d;
        zhi = z.summands.back().d;
    }
    // candidate summands of W and Hom-profile test objects, all in Im i_*
    std::vector<IndecObject> cands, probes;
    for (Interval iv : rec.ker_jstar)
        for (int d = zlo - 1; d <= zhi + 1; ++d) cands.push_back({iv.l, iv.k, d});
    for (Interval iv : rec.ker_jstar)
        for (int d = zlo - 2; d <= zhi + 2; ++d) probes.push_back({iv.l, iv.k, d});

    // dim Hom(i_* V, W[.]) is additive in W: solve for multiplicities
    Matrix sys(static_cast<int>(probes.size()), static_cast<int>(cands.size()));
    for (size_t i = 0; i < probes.size(); ++i)
        for (size_t j = 0; j < cands.size(); ++j)
            sys.at(static_cast<int>(i), static_cast<int>(j)) =
                dhom_dim(a, probes[i], cands[j]);
    Vec rhs(probes.size());
    for (size_t i = 0; i < probes.size(); ++i)
        rhs[i] = dhom_dim(a, DObject::of(probes[i]), z);

    if (!kernel_basis(sys).empty())
        throw WindowError("i_shriek: Hom profiles do not separate candidates");
    auto sol = solve(sys, rhs);
    if (!sol) throw WindowError("i_shriek: no object matches the adjoint profile");

    DObject w;
    for (size_t j = 0; j < cands.size(); ++j) {
        const Rational& c = (*sol)[j];
        if (is_zero(c)) continue;
        if (den(c) != 1 || num(c) < 0)
            throw CheckError("i_shriek: non-integral multiplicity");
        for (Integer i = 0; i < num(c); ++i) w.summands.push_back(cands[j]);
    }
    std::sort(w.summands.begin(), w.summands.end());
    return w;
}

bool is_compatible(const Recollement& rec, const TStructure& t) {
    const Algebra& a = rec.ambient;
    const Aisle& aisle = t.aisle;
    require_linear(a, "is_compatible");

    // generators of the aisle: extras plus one full slice at each finite
    // tail boundary (deeper tail objects are shifts of these)
    std::vector<IndecObject> gens = aisle.extras;
    const ExtInt& tail = aisle.tails.at(0);
    if (tail.kind == ExtInt::PosInf) {
        for (Interval iv : a.intervals()) gens.push_back({iv.l, iv.k, 0});
        // the whole category: j_!j^* image is always a member
        return true;
    }
    if (tail.finite())
        for (Interval iv : a.intervals())
            gens.push_back({iv.l, iv.k, -tail.value});

    for (IndecObject g : gens)
        for (IndecObject im : j_bang_j_star(rec, DObject::of(g)).summands)
            if (!member(a, aisle, im)) return false;
    return true;
}

TStructure induce(const Recollement& rec, const FactorTStructure& f) {
    if (!rec.idempotent || !rec.quotient)
        throw std::invalid_argument("induce: idempotent recollement expected");
    const Algebra& a = rec.ambient;
    const QuotientInfo& q = *rec.quotient;
    int r = rec.r;

    auto max_ext = [](ExtInt x, ExtInt y) { return x < y ? y : x; };

    std::vector<std::pair<Interval, ExtInt>> theta;
    for (Interval iv : a.intervals()) {
        ExtInt th = ExtInt::neg_inf(); // no constraint yet
        if (iv.l < r && r <= iv.k) {
            // j^* is one-dimensional here: the corner must admit K[d]
            switch (f.corner.kind) {
                case ExtInt::PosInf: break;
                case ExtInt::NegInf: th = ExtInt::pos_inf(); break;
                case ExtInt::Finite: th = ExtInt::fin(-f.corner.value); break;
            }
            // i^* adds M_{r,k}[d] and P_l[d+1] in quotient coordinates
            if (iv.k > r) {
                ExtInt tq = member_threshold(q.algebra, f.quotient,
                                             q.unembed(Interval{r, iv.k}));
                th = max_ext(th, tq);
            }
            if (iv.l > 0) {
                ExtInt tq = member_threshold(q.algebra, f.quotient,
                                             q.unembed(Interval{0, iv.l}));
                if (tq.finite()) tq = ExtInt::fin(tq.value - 1);
                th = max_ext(th, tq);
            }
        } else {
            th = member_threshold(q.algebra, f.quotient, q.unembed(iv));
        }
        theta.push_back({iv, th});
    }
    return TStructure{aisle_from_thresholds(a, theta)};
}

FactorTStructure restrict_t(const Recollement& rec, const TStructure& t) {
    if (!rec.idempotent || !rec.quotient)
        throw std::invalid_argument("restrict_t: idempotent recollement expected");
    if (!is_compatible(rec, t))
        throw CheckError("restrict_t: t-structure not compatible with the recollement");
    const Algebra& a = rec.ambient;
    const QuotientInfo& q = *rec.quotient;
    int r = rec.r;

    // corner: the pattern of j^* over the aisle, as an extended integer
    ExtInt corner = ExtInt::neg_inf();
    bool seen = false;
    ExtInt best = ExtInt::pos_inf();
    for (Interval iv : a.intervals()) {
        if (!(iv.l < r && r <= iv.k)) continue;
        ExtInt th = member_threshold(a, t.aisle, iv);
        if (th.kind == ExtInt::PosInf) continue;
        seen = true;
        if (th.kind == ExtInt::NegInf) { best = ExtInt::neg_inf(); break; }
        if (th < best) best = th;
    }
    if (!seen) corner = ExtInt::neg_inf();
    else if (best.kind == ExtInt::NegInf) corner = ExtInt::pos_inf();
    else corner = ExtInt::fin(-best.value);

    // quotient: the preimage {V : i_* V in the aisle}
    std::vector<std::pair<Interval, ExtInt>> theta;
    for (Interval v : q.algebra.intervals())
        theta.push_back({v, member_threshold(a, t.aisle, q.embed(v))});
    return FactorTStructure{corner, aisle_from_thresholds(q.algebra, theta)};
}

IdempotentChoice find_compatible_idempotent(const Algebra& a, const TStructure& t) {
    require_linear(a, "find_compatible_idempotent");
    auto [norm, shift_used] = normalize(a, t);
    const Aisle& aisle = norm.aisle;
    int n = a.n;

    std::vector<Interval> s0; // the set S: degree-zero members
    for (const IndecObject& e : aisle.extras)
        if (e.d == 0) s0.push_back(e.interval());

    if (s0.empty()) return {n, "0"};

    int m0 = 0, m1 = n;
    for (Interval iv : s0) {
        m0 = std::max(m0, iv.k);
        m1 = std::min(m1, iv.l);
    }
    if (!(m0 == n && m1 == 0)) {
        if (m0 != n) return {n, "1a"};
        return {m1, "1b"};
    }

    bool pn_in_s = std::find(s0.begin(), s0.end(), projective(n)) != s0.end();
    if (pn_in_s) {
        // scan negative degrees, nearest first, for a slice where some
        // P_s -> P_n sits in the aisle without P_n
        int kmin = 0;
        for (const IndecObject& e : aisle.extras) kmin = std::min(kmin, e.d);
        for (int k = -1; k >= kmin; --k) {
            if (member(a, aisle, {0, n, k})) continue;
            if (!member(a, aisle, {0, n, k + 1})) continue;
            for (int s = 1; s <= n - 1; ++s)
                if (member(a, aisle, {s, n, k})) return {s, "2b"};
        }
        return {n, "2a"};
    }

    int p0 = 0;
    for (Interval iv : s0)
        if (iv.l == 0) p0 = std::max(p0, iv.k);
    return {p0 + 1, "3"};
}

Recollement twist_recollement(const Algebra& a, AutoEq phi, const Recollement& rec) {
    IndecObject g = apply_autoeq(a, phi, rec.generator);
    Recollement out = make_exceptional_recollement(a, g);
    // the perpendicular data must be the transport of the old one
    std::set<Interval> transported;
    for (Interval iv : rec.ker_jstar)
        transported.insert(apply_autoeq(a, phi, shifted(iv, 0)).interval());
    std::set<Interval> scanned(out.ker_jstar.begin(), out.ker_jstar.end());
    if (transported != scanned)
        throw CheckError("twist_recollement: transported perpendicular disagrees");
    return out;
}

std::vector<IndecObject> simples_of_induced_heart(const Recollement& rec,
                                                  const FactorTStructure& f) {
    if (!rec.idempotent || !rec.quotient)
        throw std::invalid_argument("simples_of_induced_heart: idempotent recollement expected");
    if (!f.corner.finite() || !is_bounded(f.quotient))
        throw std::invalid_argument("simples_of_induced_heart: bounded factors expected");
    const Algebra& a = rec.ambient;
    const QuotientInfo& q = *rec.quotient;
    TStructure t = induce(rec, f);

    std::vector<IndecObject> predicted;
    Heart qh = heart_of(q.algebra, TStructure{f.quotient});
    for (IndecObject s : qh.simples) predicted.push_back(q.embed(s));

    // the intermediate extension of the corner simple: the one heart simple
    // seen by j^*, a quotient of H^0 j_!(corner simple) and a subobject of
    // H^0 j_*(corner simple)
    Heart h = heart_of(a, t);
    int corner_deg = -f.corner.value;
    IndecObject jlower = shifted(projective(rec.r), corner_deg);
    IndecObject jupper = shifted(injective_at(a, rec.r), corner_deg);
    std::optional<IndecObject> middle;
    for (IndecObject s : h.simples) {
        if (rec.in_ker_jstar(s.interval())) continue;
        if (s.d != corner_deg)
            throw CheckError("simples_of_induced_heart: j^* of the extra simple is "
                             "not the corner simple");
        if (dhom_dim(a, jlower, s) < 1 || dhom_dim(a, s, jupper) < 1)
            throw CheckError("simples_of_induced_heart: intermediate extension "
                             "witnesses missing");
        if (middle) throw CheckError("simples_of_induced_heart: extra simple not unique");
        middle = s;
    }
    if (!middle) throw CheckError("simples_of_induced_heart: no simple outside Im i_*");
    predicted.push_back(*middle);
    std::sort(predicted.begin(), predicted.end());

    std::vector<IndecObject> actual = h.simples;
    std::sort(actual.begin(), actual.end());
    if (predicted != actual)
        throw CheckError("simples_of_induced_heart: prediction disagrees with the heart");
    if (predicted.size() != static_cast<size_t>(a.n))
        throw CheckError("simples_of_induced_heart: simple count is not the rank");
    return predicted;
}

int smc_pivot(const Algebra& a, const Smc& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        bool pivot = true;
        for (size_t j = 0; j < s.size() && pivot; ++j) {
            if (j == i) continue;
            int rel = s[i].d - s[j].d; // only these shifts can carry Hom
            for (int m = rel; m <= rel + 1; ++m)
                if (dhom_dim(a, s[i], shift(s[j], m)) != 0) { pivot = false; break; }
        }
        if (pivot) return static_cast<int>(i);
    }
    throw CheckError("smc_pivot: no member is perpendicular to all others");
}

std::pair<int, int> pivot_to_projective(const Algebra& a, IndecObject x) {
    IndecObject cur = x;
    for (int s = 0; s <= 2 * (a.n + 2); ++s) {
        if (cur.l == 0) return {s, cur.k};
        cur = tau(a, cur);
    }
    throw CheckError("pivot_to_projective: iteration cap exceeded");
}

} // namespace typea
