#include "typea/tstructure.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace typea {

namespace {

std::string show(IndecObject x) {
    std::ostringstream os;
    os << "M(" << x.l << "," << x.k << ")[" << x.d << "]";
    return os.str();
}

int block_of(const Algebra& a, Interval iv) {
    int b = a.block_containing(iv.l, iv.k);
    if (b < 0) throw std::invalid_argument("interval outside every block");
    return b;
}

// Cones of canonical maps are pure functions of the interval pair and the
// relative shift; the module-level computation behind them is exact but not
// free, so enumeration loops go through this cache. Idempotent population,
// single-threaded use.
const DObject& cone_cached(const Algebra& a, IndecObject x, IndecObject y) {
    using Key = std::tuple<int, std::vector<Block>, Interval, Interval, int>;
    static std::map<Key, DObject> cache;
    Key key{a.n, a.blocks, x.interval(), y.interval(), y.d - x.d};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, cone_of_map(a, shifted(x.interval(), 0),
                                            shifted(y.interval(), y.d - x.d)))
                 .first;
    return it->second;
}

DObject cone_of_map_shifted(const Algebra& a, IndecObject x, IndecObject y) {
    return cone_cached(a, x, y).shifted_by(x.d);
}

} // namespace

Aisle Aisle::standard(const Algebra& a, int t) {
    Aisle s;
    s.tails.assign(a.blocks.size(), ExtInt::fin(t));
    return s;
}

Aisle Aisle::zero(const Algebra& a) {
    Aisle s;
    s.tails.assign(a.blocks.size(), ExtInt::neg_inf());
    return s;
}

Aisle Aisle::everything(const Algebra& a) {
    Aisle s;
    s.tails.assign(a.blocks.size(), ExtInt::pos_inf());
    return s;
}

bool member(const Algebra& a, const Aisle& aisle, IndecObject x) {
    int b = block_of(a, x.interval());
    const ExtInt& tail = aisle.tails.at(b);
    switch (tail.kind) {
        case ExtInt::PosInf:
            return true;
        case ExtInt::Finite:
            if (x.d >= -tail.value) return true;
            return std::find(aisle.extras.begin(), aisle.extras.end(), x) !=
                   aisle.extras.end();
        case ExtInt::NegInf:
            for (const IndecObject& e : aisle.extras)
                if (e.l == x.l && e.k == x.k && e.d <= x.d) return true;
            return false;
    }
    return false;
}

ExtInt member_threshold(const Algebra& a, const Aisle& aisle, Interval iv) {
    int b = block_of(a, iv);
    const ExtInt& tail = aisle.tails.at(b);
    if (tail.kind == ExtInt::PosInf) return ExtInt::neg_inf();
    if (tail.kind == ExtInt::NegInf) {
        ExtInt best = ExtInt::pos_inf();
        for (const IndecObject& e : aisle.extras)
            if (e.interval() == iv && (!best.finite() || e.d < best.value))
                best = ExtInt::fin(e.d);
        return best;
    }
    int theta = -tail.value;
    auto present = [&](int d) {
        return std::find(aisle.extras.begin(), aisle.extras.end(),
                         IndecObject{iv.l, iv.k, d}) != aisle.extras.end();
    };
    while (present(theta - 1)) --theta;
    return ExtInt::fin(theta);
}

Aisle aisle_from_thresholds(const Algebra& a,
                            const std::vector<std::pair<Interval, ExtInt>>& thresholds) {
    Aisle out;
    out.tails.assign(a.blocks.size(), ExtInt::neg_inf());
    std::map<Interval, ExtInt> theta(thresholds.begin(), thresholds.end());
    for (size_t b = 0; b < a.blocks.size(); ++b) {
        std::vector<Interval> ivs;
        for (Interval iv : a.intervals())
            if (block_of(a, iv) == static_cast<int>(b)) ivs.push_back(iv);
        auto th_of = [&](Interval iv) {
            return theta.count(iv) ? theta.at(iv) : ExtInt::pos_inf();
        };
        int n_all = 0, n_never = 0, max_fin = INT_MIN;
        for (Interval iv : ivs) {
            ExtInt th = th_of(iv);
            if (th.kind == ExtInt::NegInf) ++n_all;
            else if (th.kind == ExtInt::PosInf) ++n_never;
            else max_fin = std::max(max_fin, th.value);
        }
        if (ivs.empty() || n_all == static_cast<int>(ivs.size())) {
            out.tails[b] = ExtInt::pos_inf();
            continue;
        }
        if (n_all > 0)
            throw WindowError("aisle_from_thresholds: a proper subfamily with every "
                              "shift is not representable");
        if (n_never == static_cast<int>(ivs.size())) {
            out.tails[b] = ExtInt::neg_inf(); // no members in this block
            continue;
        }
        if (n_never == 0) {
            out.tails[b] = ExtInt::fin(-max_fin);
            for (Interval iv : ivs)
                for (int d = th_of(iv).value; d < max_fin; ++d)
                    out.extras.push_back({iv.l, iv.k, d});
        } else {
            out.tails[b] = ExtInt::neg_inf();
            for (Interval iv : ivs)
                if (th_of(iv).finite())
                    out.extras.push_back({iv.l, iv.k, th_of(iv).value});
        }
    }
    return canonicalize(a, out);
}

Aisle canonicalize(const Algebra& a, const Aisle& aisle) {
    Aisle out;
    out.tails = aisle.tails;
    std::vector<std::vector<IndecObject>> per_block(a.blocks.size());
    for (const IndecObject& e : aisle.extras)
        per_block[block_of(a, e.interval())].push_back(e);

    for (size_t b = 0; b < a.blocks.size(); ++b) {
        std::vector<Interval> ivs;
        for (Interval iv : a.intervals())
            if (block_of(a, iv) == static_cast<int>(b)) ivs.push_back(iv);
        ExtInt& tail = out.tails[b];
        auto& extras = per_block[b];
        if (tail.kind == ExtInt::PosInf) {
            extras.clear();
            continue;
        }
        if (tail.kind == ExtInt::NegInf) {
            // keep one generator per interval; convert to a finite tail when
            // every interval of the block is generated
            std::map<Interval, int> gen;
            for (const IndecObject& e : extras) {
                auto it = gen.find(e.interval());
                if (it == gen.end() || e.d < it->second) gen[e.interval()] = e.d;
            }
            if (!ivs.empty() && gen.size() == ivs.size()) {
                int max_fin = INT_MIN;
                for (auto& [iv, d] : gen) max_fin = std::max(max_fin, d);
                tail = ExtInt::fin(-max_fin);
                extras.clear();
                for (auto& [iv, d] : gen)
                    for (int x = d; x < max_fin; ++x) extras.push_back({iv.l, iv.k, x});
            } else {
                extras.clear();
                for (auto& [iv, d] : gen) extras.push_back({iv.l, iv.k, d});
            }
            continue;
        }
        // finite tail: drop implied extras, then absorb complete slices
        int t = tail.value;
        std::set<IndecObject> keep;
        for (const IndecObject& e : extras)
            if (e.d < -t) keep.insert(e);
        for (;;) {
            bool full = !ivs.empty();
            for (Interval iv : ivs)
                if (!keep.count({iv.l, iv.k, -t - 1})) { full = false; break; }
            if (!full) break;
            for (Interval iv : ivs) keep.erase({iv.l, iv.k, -t - 1});
            ++t;
        }
        tail = ExtInt::fin(t);
        extras.assign(keep.begin(), keep.end());
    }

    for (size_t b = 0; b < a.blocks.size(); ++b)
        out.extras.insert(out.extras.end(), per_block[b].begin(), per_block[b].end());
    std::sort(out.extras.begin(), out.extras.end());
    return out;
}

// Image of the aisle under the shift functor [by]: members move up by `by`,
// so the tail index drops by `by` (the [1]-image of the standard aisle is
// the standard aisle at tail -1).
Aisle aisle_shift(const Algebra& a, const Aisle& aisle, int by) {
    Aisle out;
    for (const ExtInt& t : aisle.tails)
        out.tails.push_back(t.finite() ? ExtInt::fin(t.value - by) : t);
    for (IndecObject e : aisle.extras) out.extras.push_back(shift(e, by));
    return canonicalize(a, out);
}

namespace {

void require_single_block(const Algebra& a, const char* who) {
    if (a.blocks.size() != 1)
        throw std::invalid_argument(std::string(who) + ": single-block algebra expected");
}

} // namespace

Aisle aisle_tau(const Algebra& a, const Aisle& aisle) {
    require_single_block(a, "aisle_tau");
    const ExtInt& tail = aisle.tails.at(0);
    Aisle out;
    if (tail.kind == ExtInt::PosInf) return aisle;
    out.tails.push_back(tail);
    if (tail.finite()) {
        // tau of the tail keeps every non-injective family in place and
        // drops the k = n column one degree
        for (int l = 0; l < a.n; ++l)
            out.extras.push_back({l, a.n, -tail.value - 1});
    }
    for (IndecObject e : aisle.extras)
        out.extras.push_back(tau(a, e));
    return canonicalize(a, out);
}

Aisle aisle_tau_inverse(const Algebra& a, const Aisle& aisle) {
    require_single_block(a, "aisle_tau_inverse");
    const ExtInt& tail = aisle.tails.at(0);
    Aisle out;
    if (tail.kind == ExtInt::PosInf) return aisle;
    if (tail.finite()) {
        out.tails.push_back(ExtInt::fin(tail.value - 1));
        for (Interval iv : a.intervals())
            if (iv.l >= 1) out.extras.push_back({iv.l, iv.k, -tail.value});
    } else {
        out.tails.push_back(tail);
    }
    for (IndecObject e : aisle.extras)
        out.extras.push_back(tau_inverse(a, e));
    return canonicalize(a, out);
}

Aisle aisle_apply(const Algebra& a, AutoEq phi, const Aisle& aisle) {
    Aisle r = aisle;
    for (int i = 0; i < phi.a; ++i) r = aisle_tau(a, r);
    for (int i = 0; i > phi.a; --i) r = aisle_tau_inverse(a, r);
    return aisle_shift(a, r, phi.b);
}

bool is_bounded(const Aisle& aisle) {
    return std::all_of(aisle.tails.begin(), aisle.tails.end(),
                       [](const ExtInt& t) { return t.finite(); });
}

bool in_coaisle_geq1(const Algebra& a, const Aisle& aisle, IndecObject x) {
    int b = block_of(a, x.interval());
    const Block& blk = a.blocks[b];
    for (int du = x.d - 1; du <= x.d; ++du)
        for (int l = blk.offset; l < blk.offset + blk.size; ++l)
            for (int k = l + 1; k <= blk.offset + blk.size; ++k) {
                IndecObject u{l, k, du};
                if (dhom_dim(a, u, x) > 0 && member(a, aisle, u)) return false;
            }
    return true;
}

bool in_coaisle_geq0(const Algebra& a, const Aisle& aisle, IndecObject x) {
    return in_coaisle_geq1(a, aisle, shift(x, -1));
}

// ---------------------------------------------------------------------------
// truncation search

namespace {

std::vector<int> class_of(const Algebra& a, const std::vector<IndecObject>& xs) {
    std::vector<int> c(a.n, 0);
    for (IndecObject x : xs) {
        int sign = (x.d % 2 == 0) ? 1 : -1;
        for (int v = x.l; v < x.k; ++v) c[v] += sign;
    }
    return c;
}

struct TruncationSearch {
    int candidates = 0;
    Truncation result;
};

// All truncation candidates for an indecomposable z. Every summand of the
// aisle half admits a nonzero map to z, every summand of the coaisle half
// receives one from z, and both halves are multiplicity-free (thin Hom
// spaces), so the search runs over subsets of z's hammock.
TruncationSearch truncate_search(const Algebra& a, const Aisle& aisle, IndecObject z) {
    int b = block_of(a, z.interval());
    const Block& blk = a.blocks[b];
    std::vector<IndecObject> pool_a, pool_b;
    for (int l = blk.offset; l < blk.offset + blk.size; ++l)
        for (int k = l + 1; k <= blk.offset + blk.size; ++k) {
            for (int du = z.d - 1; du <= z.d; ++du) {
                IndecObject u{l, k, du};
                if (dhom_dim(a, u, z) == 1 && member(a, aisle, u)) pool_a.push_back(u);
            }
            for (int dv = z.d; dv <= z.d + 1; ++dv) {
                IndecObject v{l, k, dv};
                if (dhom_dim(a, z, v) == 1 && in_coaisle_geq1(a, aisle, v))
                    pool_b.push_back(v);
            }
        }

    // profile test objects
    std::vector<IndecObject> test_u, test_v;
    for (int l = blk.offset; l < blk.offset + blk.size; ++l)
        for (int k = l + 1; k <= blk.offset + blk.size; ++k) {
            for (int du = z.d - 2; du <= z.d; ++du) {
                IndecObject u{l, k, du};
                if (member(a, aisle, u)) test_u.push_back(u);
            }
            for (int dv = z.d; dv <= z.d + 2; ++dv) {
                IndecObject v{l, k, dv};
                if (in_coaisle_geq1(a, aisle, v)) test_v.push_back(v);
            }
        }

    std::vector<int> zc = class_of(a, {z});
    TruncationSearch out;
    size_t na = pool_a.size(), nb = pool_b.size();
    if (na > 20 || nb > 20) throw WindowError("truncate: candidate pool too large");
    for (size_t ma = 0; ma < (size_t{1} << na); ++ma) {
        std::vector<IndecObject> xs;
        for (size_t i = 0; i < na; ++i)
            if (ma & (size_t{1} << i)) xs.push_back(pool_a[i]);
        bool ok_u = true;
        for (IndecObject u : test_u) {
            int lhs = 0;
            for (IndecObject x : xs) lhs += dhom_dim(a, u, x);
            if (lhs != dhom_dim(a, u, z)) { ok_u = false; break; }
        }
        if (!ok_u) continue;
        std::vector<int> xc = class_of(a, xs);
        for (size_t mb = 0; mb < (size_t{1} << nb); ++mb) {
            std::vector<IndecObject> ys;
            for (size_t i = 0; i < nb; ++i)
                if (mb & (size_t{1} << i)) ys.push_back(pool_b[i]);
            std::vector<int> sum = xc;
            {
                std::vector<int> yc = class_of(a, ys);
                for (int v = 0; v < a.n; ++v) sum[v] += yc[v];
            }
            if (sum != zc) continue;
            bool ok_v = true;
            for (IndecObject v : test_v) {
                int lhs = 0;
                for (IndecObject y : ys) lhs += dhom_dim(a, y, v);
                if (lhs != dhom_dim(a, z, v)) { ok_v = false; break; }
            }
            if (!ok_v) continue;
            ++out.candidates;
            if (out.candidates == 1)
                out.result = Truncation{DObject(xs), DObject(ys)};
        }
    }
    return out;
}

} // namespace

Truncation truncate(const Algebra& a, const TStructure& t, const DObject& z) {
    Truncation total;
    for (IndecObject s : z.summands) {
        TruncationSearch r = truncate_search(a, t.aisle, s);
        if (r.candidates == 0)
            throw WindowError("truncate: no triangle found for " + show(s));
        if (r.candidates > 1)
            throw CheckError("truncate: truncation of " + show(s) + " not unique");
        total.below = total.below.plus(r.result.below);
        total.above = total.above.plus(r.result.above);
    }
    return total;
}

DObject cohomology(const Algebra& a, const TStructure& t, const DObject& z, int i) {
    DObject low = truncate(a, t, z.shifted_by(i)).below.shifted_by(-i);
    return truncate(a, t, low.shifted_by(i - 1)).above.shifted_by(1 - i);
}

// ---------------------------------------------------------------------------
// validation

ValidationReport validate_tstructure(const Algebra& a, const TStructure& t,
                                     ShiftWindow window) {
    const Aisle& aisle = t.aisle;
    ValidationReport rep;
    std::vector<IndecObject> window_members;
    std::vector<IndecObject> window_objects;
    for (Interval iv : a.intervals())
        for (int d = window.lo; d <= window.hi; ++d) {
            IndecObject x{iv.l, iv.k, d};
            window_objects.push_back(x);
            if (member(a, aisle, x)) window_members.push_back(x);
        }

    // (1) closed under [1]
    for (IndecObject x : window_members)
        if (!member(a, aisle, shift(x, 1))) {
            return {false, "shift-closure",
                    show(x) + " is a member but " + show(shift(x, 1)) + " is not"};
        }

    // (1') closed under extensions: for members a0, b with a map b -> a0[1],
    // the middle of the corresponding triangle stays inside
    for (IndecObject bb : window_members)
        for (IndecObject aa : window_members) {
            if (dhom_dim(a, bb, shift(aa, 1)) != 1) continue;
            DObject mid = cone_of_map_shifted(a, shift(bb, -1), aa);
            for (IndecObject m : mid.summands)
                if (!member(a, aisle, m))
                    return {false, "extension-closure",
                            "extension of " + show(bb) + " by " + show(aa) +
                                " needs " + show(m)};
        }

    // (2) Hom(aisle, derived coaisle) = 0
    for (IndecObject u : window_members)
        for (IndecObject v : window_objects)
            if (in_coaisle_geq1(a, aisle, v) && dhom_dim(a, u, v) != 0)
                return {false, "orthogonality",
                        "Hom(" + show(u) + ", " + show(v) + ") != 0"};

    // (3) truncation triangles exist and are unique
    for (IndecObject z : window_objects) {
        TruncationSearch r = truncate_search(a, aisle, z);
        if (r.candidates == 0)
            return {false, "truncation-triangle", "no triangle for " + show(z)};
        if (r.candidates > 1)
            return {false, "truncation-triangle",
                    "triangle for " + show(z) + " not unique"};
    }
    return rep;
}

// ---------------------------------------------------------------------------
// hearts

Heart heart_of(const Algebra& a, const TStructure& t) {
    const Aisle& aisle = t.aisle;
    Heart h;
    for (size_t b = 0; b < a.blocks.size(); ++b) {
        const Block& blk = a.blocks[b];
        const ExtInt& tail = aisle.tails[b];
        if (tail.kind == ExtInt::PosInf) continue; // no coaisle part
        std::vector<Interval> ivs;
        for (Interval iv : a.intervals())
            if (block_of(a, iv) == static_cast<int>(b)) ivs.push_back(iv);
        for (Interval iv : ivs) {
            ExtInt th = member_threshold(a, aisle, iv);
            if (!th.finite()) continue;
            int hi = tail.finite() ? -tail.value : th.value + blk.size + 1;
            for (int d = th.value; d <= hi; ++d) {
                IndecObject x{iv.l, iv.k, d};
                if (member(a, aisle, x) && in_coaisle_geq0(a, aisle, x))
                    h.indecomposables.push_back(x);
            }
        }
    }
    std::sort(h.indecomposables.begin(), h.indecomposables.end());

    // simples: every nonzero heart map in is epi, every one out is mono
    TStructure ts{aisle};
    for (IndecObject x : h.indecomposables) {
        bool simple = true;
        for (IndecObject y : h.indecomposables) {
            if (y == x) continue;
            if (dhom_dim(a, y, x) == 1) {
                DObject c = cone_of_map_shifted(a, y, x);
                if (!cohomology(a, ts, c, 0).is_zero()) { simple = false; break; }
            }
            if (dhom_dim(a, x, y) == 1) {
                DObject c = cone_of_map_shifted(a, x, y);
                if (!cohomology(a, ts, c, -1).is_zero()) { simple = false; break; }
            }
        }
        if (simple) h.simples.push_back(x);
    }
    return h;
}

// ---------------------------------------------------------------------------
// simple-minded collections

namespace {

bool pair_axioms_hold(const Algebra& a, IndecObject x, IndecObject y) {
    // axiom (2) for the unordered pair
    if (x == y) return false;
    if (dhom_dim(a, x, y) != 0 || dhom_dim(a, y, x) != 0) return false;
    // axiom (1): no Hom into negative shifts, either direction
    for (int m = -1; m >= -2 - std::abs(x.d - y.d); --m) {
        if (dhom_dim(a, x, shift(y, m)) != 0) return false;
        if (dhom_dim(a, y, shift(x, m)) != 0) return false;
    }
    return true;
}

bool classes_unimodular(const Algebra& a, const Smc& s) {
    Matrix m(a.n, static_cast<int>(s.size()));
    for (size_t j = 0; j < s.size(); ++j) {
        std::vector<int> c = class_of(a, {s[j]});
        for (int v = 0; v < a.n; ++v) m.at(v, static_cast<int>(j)) = c[v];
    }
    if (m.rows() != m.cols()) return false;
    Rational det = determinant(m);
    return det == Rational(1) || det == Rational(-1);
}

// closure of a set of intervals under cones of the canonical maps between
// shifts of its members; generation holds iff every interval is reached
bool generates(const Algebra& a, const Smc& s) {
    std::set<Interval> w;
    for (IndecObject x : s) w.insert(x.interval());
    size_t total = a.intervals().size();
    bool grew = true;
    while (grew && w.size() < total) {
        grew = false;
        std::vector<Interval> cur(w.begin(), w.end());
        for (Interval u : cur)
            for (Interval v : cur) {
                std::vector<DObject> cones;
                if (hom_formula(a, u, v) == 1)
                    cones.push_back(cone_cached(a, shifted(u, 0), shifted(v, 0)));
                if (ext1_formula(a, u, v) == 1)
                    cones.push_back(cone_cached(a, shifted(u, 0), shifted(v, 1)));
                for (const DObject& c : cones)
                    for (IndecObject m : c.summands)
                        if (w.insert(m.interval()).second) grew = true;
            }
    }
    return w.size() == total;
}

} // namespace

bool smc_check(const Algebra& a, const Smc& s) {
    if (static_cast<int>(s.size()) != a.n) return false;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!pair_axioms_hold(a, s[i], s[j])) return false;
    if (!classes_unimodular(a, s)) return false;
    return generates(a, s);
}

TStructure aisle_from_smc(const Algebra& a, const Smc& s) {
    if (!smc_check(a, s))
        throw std::invalid_argument("aisle_from_smc: not a simple-minded collection");

    int lo = s.front().d, max_d = s.front().d;
    for (IndecObject x : s) {
        lo = std::min(lo, x.d);
        max_d = std::max(max_d, x.d);
    }
    int hi = max_d + a.n + 2;

    std::set<IndecObject> closed;
    for (IndecObject x : s)
        for (int m = 0; x.d + m <= hi; ++m) closed.insert(shift(x, m));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IndecObject> cur(closed.begin(), closed.end());
        for (IndecObject bb : cur)
            for (IndecObject aa : cur) {
                if (dhom_dim(a, bb, shift(aa, 1)) != 1) continue;
                for (IndecObject m : cone_of_map_shifted(a, shift(bb, -1), aa).summands)
                    if (m.d <= hi && closed.insert(m).second) grew = true;
            }
    }

    // read thresholds from the closure; the top slice must be complete
    std::vector<std::pair<Interval, ExtInt>> theta;
    for (Interval iv : a.intervals()) {
        int th = hi;
        while (th > lo && closed.count({iv.l, iv.k, th - 1})) --th;
        if (th == hi)
            throw WindowError("aisle_from_smc: closure did not reach a standard tail");
        theta.push_back({iv, ExtInt::fin(th)});
    }
    return TStructure{aisle_from_thresholds(a, theta)};
}

Smc recover_smc(const Algebra& a, const TStructure& t) {
    Heart h = heart_of(a, t);
    if (static_cast<int>(h.simples.size()) != a.n)
        throw CheckError("recover_smc: heart does not have rank-many simples");
    Smc s = h.simples;
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Smc> enumerate_smc(const Algebra& a, ShiftWindow window) {
    std::vector<IndecObject> pool;
    for (int d = window.lo; d <= window.hi; ++d)
        for (Interval iv : a.intervals()) pool.push_back({iv.l, iv.k, d});
    std::sort(pool.begin(), pool.end());

    size_t np = pool.size();
    std::vector<std::vector<bool>> ok(np, std::vector<bool>(np, false));
    for (size_t i = 0; i < np; ++i)
        for (size_t j = i + 1; j < np; ++j)
            ok[i][j] = ok[j][i] = pair_axioms_hold(a, pool[i], pool[j]);

    std::vector<Smc> out;
    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (static_cast<int>(chosen.size()) == a.n) {
            Smc s;
            for (size_t i : chosen) s.push_back(pool[i]);
            if (classes_unimodular(a, s) && generates(a, s)) out.push_back(s);
            return;
        }
        for (size_t i = start; i < np; ++i) {
            bool fits = true;
            for (size_t c : chosen)
                if (!ok[c][i]) { fits = false; break; }
            if (!fits) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Aisle> enumerate_bounded_aisles(const Algebra& a, ShiftWindow window) {
    std::vector<Interval> ivs = a.intervals();
    int w = window.hi - window.lo + 1;
    std::vector<Aisle> out;
    std::vector<int> theta(ivs.size(), 0);
    ShiftWindow vw{window.lo - 1, window.hi + 2};
    auto emit = [&]() {
        std::vector<std::pair<Interval, ExtInt>> th;
        for (size_t i = 0; i < ivs.size(); ++i)
            th.push_back({ivs[i], ExtInt::fin(window.lo + theta[i])});
        Aisle cand = aisle_from_thresholds(a, th);
        if (validate_tstructure(a, TStructure{cand}, vw).ok) out.push_back(cand);
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == ivs.size()) {
            emit();
            return;
        }
        for (int v = 0; v < w; ++v) {
            theta[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Aisle& x, const Aisle& y) {
        return std::tie(x.tails, x.extras) < std::tie(y.tails, y.extras);
    });
    return out;
}

std::vector<Aisle> enumerate_aisles_with_degenerate(const Algebra& a, ShiftWindow window) {
    std::vector<Interval> ivs = a.intervals();
    // alphabet: window.lo .. window.hi+1, plus "never"
    int w = window.hi - window.lo + 2;
    std::vector<Aisle> out;
    out.push_back(Aisle::everything(a));
    std::vector<int> theta(ivs.size(), 0);
    ShiftWindow vw{window.lo - 1, window.hi + 2};
    auto emit = [&]() {
        std::vector<std::pair<Interval, ExtInt>> th;
        for (size_t i = 0; i < ivs.size(); ++i)
            th.push_back({ivs[i], theta[i] == w ? ExtInt::pos_inf()
                                                : ExtInt::fin(window.lo + theta[i])});
        Aisle cand = aisle_from_thresholds(a, th);
        if (validate_tstructure(a, TStructure{cand}, vw).ok) out.push_back(cand);
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == ivs.size()) {
            emit();
            return;
        }
        for (int v = 0; v <= w; ++v) {
            theta[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Aisle& x, const Aisle& y) {
        return std::tie(x.tails, x.extras) < std::tie(y.tails, y.extras);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<TStructure, int> normalize(const Algebra& a, const TStructure& t) {
    require_single_block(a, "normalize");
    const ExtInt& tail = t.aisle.tails.at(0);
    if (!tail.finite()) throw std::invalid_argument("normalize: t-structure not bounded");
    // move the tail to exactly -1; report the shift in aisle-index terms
    // (the normalized standard t-structure is its own shift by -1)
    int by = tail.value + 1;
    return {TStructure{aisle_shift(a, t.aisle, by)}, -by};
}

std::optional<AutoEq> orbit_equivalent(const Algebra& a, const TStructure& t1,
                                       const TStructure& t2) {
    require_single_block(a, "orbit_equivalent");
    if (!is_bounded(t1.aisle) || !is_bounded(t2.aisle))
        throw std::invalid_argument("orbit_equivalent: bounded t-structures expected");
    Aisle target = canonicalize(a, t2.aisle);
    Aisle cur = canonicalize(a, t1.aisle);
    for (int x = 0; x <= a.n; ++x) {
        // align tails by a shift, then compare canonical forms
        if (cur.tails.at(0).finite() && target.tails.at(0).finite()) {
            int b = cur.tails[0].value - target.tails[0].value;
            if (aisle_shift(a, cur, b) == target) return AutoEq{x, b};
        }
        cur = aisle_tau(a, cur);
    }
    return std::nullopt;
}

int ar_component_count(const Algebra& a, const TStructure& t) {
    if (a.n != 2 || a.blocks.size() != 1)
        throw std::invalid_argument("ar_component_count: A_2 only");
    const ExtInt& tail = t.aisle.tails.at(0);
    if (tail.kind == ExtInt::PosInf) return 1;
    if (!tail.finite())
        throw std::invalid_argument("ar_component_count: bounded t-structure expected");

    // The AR quiver of D^b(A_2) is the chain
    //   ... P_1[d] - P_2[d] - S_2[d] - P_1[d+1] - ...
    auto pos = [](IndecObject x) {
        if (x.l == 0 && x.k == 1) return 3 * x.d;
        if (x.l == 0 && x.k == 2) return 3 * x.d + 1;
        return 3 * x.d + 2;
    };
    std::vector<long long> ps;
    for (IndecObject e : t.aisle.extras) ps.push_back(pos(e));
    ps.push_back(-3LL * tail.value); // the contiguous tail starts here
    std::sort(ps.begin(), ps.end());
    int comps = 1;
    for (size_t i = 1; i < ps.size(); ++i)
        if (ps[i] - ps[i - 1] > 1) ++comps;
    return comps;
}

Algebra semisimple_algebra(int s) {
    Algebra a;
    a.n = s;
    for (int i = 0; i < s; ++i) a.blocks.push_back({i, 1});
    return a;
}

std::vector<Aisle> semisimple_tstructures(int s, ShiftWindow window) {
    if (s < 1) throw std::invalid_argument("semisimple_tstructures: s >= 1 expected");
    std::vector<ExtInt> alphabet;
    alphabet.push_back(ExtInt::neg_inf());
    for (int v = window.lo; v <= window.hi; ++v) alphabet.push_back(ExtInt::fin(v));
    alphabet.push_back(ExtInt::pos_inf());

    std::vector<Aisle> out;
    std::vector<ExtInt> tails(s, ExtInt::neg_inf());
    auto rec = [&](auto&& self, int i) -> void {
        if (i == s) {
            out.push_back(Aisle{tails, {}});
            return;
        }
        for (const ExtInt& v : alphabet) {
            tails[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace typea
