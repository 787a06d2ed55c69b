#include "typea/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace typea {

Algebra Algebra::linear(int n) {
    Algebra a;
    a.n = n;
    if (n > 0) a.blocks.push_back({0, n});
    return a;
}

int Algebra::block_containing(int l, int k) const {
    for (size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].offset <= l && k <= blocks[b].offset + blocks[b].size)
            return static_cast<int>(b);
    return -1;
}

bool Algebra::valid_interval(int l, int k) const {
    return 0 <= l && l < k && k <= n && block_containing(l, k) >= 0;
}

std::vector<Interval> Algebra::intervals() const {
    std::vector<Interval> out;
    for (const Block& b : blocks)
        for (int l = b.offset; l < b.offset + b.size; ++l)
            for (int k = l + 1; k <= b.offset + b.size; ++k) out.push_back({l, k});
    std::sort(out.begin(), out.end());
    return out;
}

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Representation Representation::zero(const Algebra& a) {
    Representation r;
    r.dims.assign(a.n, 0);
    for (int i = 0; i + 1 < a.n; ++i) r.maps.push_back(Matrix(0, 0));
    return r;
}

bool ModuleMap::commutes() const {
    for (size_t v = 0; v + 1 < components.size(); ++v) {
        Matrix lhs = components[v] * source.maps[v];
        Matrix rhs = target.maps[v] * components[v + 1];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

Representation realize(const Algebra& a, Interval m) {
    if (!a.valid_interval(m.l, m.k)) throw std::invalid_argument("realize: invalid interval");
    Representation r = Representation::zero(a);
    for (int v = m.l; v < m.k; ++v) r.dims[v] = 1; // support {l+1..k}, 0-based {l..k-1}
    for (int v = 0; v + 1 < a.n; ++v) {
        r.maps[v] = Matrix(r.dims[v], r.dims[v + 1]);
        if (m.l <= v && v + 1 < m.k) r.maps[v].at(0, 0) = 1;
    }
    return r;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    Representation r;
    size_t n = x.dims.size();
    if (n != y.dims.size()) throw std::invalid_argument("direct_sum: vertex mismatch");
    for (size_t v = 0; v < n; ++v) r.dims.push_back(x.dims[v] + y.dims[v]);
    for (size_t v = 0; v + 1 < n; ++v) {
        Matrix m(r.dims[v], r.dims[v + 1]);
        for (int i = 0; i < x.dims[v]; ++i)
            for (int j = 0; j < x.dims[v + 1]; ++j) m.at(i, j) = x.maps[v].at(i, j);
        for (int i = 0; i < y.dims[v]; ++i)
            for (int j = 0; j < y.dims[v + 1]; ++j)
                m.at(x.dims[v] + i, x.dims[v + 1] + j) = y.maps[v].at(i, j);
        r.maps.push_back(std::move(m));
    }
    return r;
}

std::vector<int> dim_vector(const Algebra& a, Interval m) {
    std::vector<int> d(a.n, 0);
    for (int v = m.l; v < m.k; ++v) d[v] = 1;
    return d;
}

namespace {

// The commuting-square system: unknowns are the entries of all vertex
// components f_v, constraints f_v s_v = t_v f_{v+1} per arrow.
struct HomSystem {
    std::vector<int> offset; // unknown-block offset per vertex
    int unknowns = 0;
    Matrix constraints;
};

HomSystem hom_system(const Representation& x, const Representation& y) {
    HomSystem sys;
    size_t n = x.dims.size();
    sys.offset.resize(n);
    for (size_t v = 0; v < n; ++v) {
        sys.offset[v] = sys.unknowns;
        sys.unknowns += x.dims[v] * y.dims[v];
    }
    int rows = 0;
    for (size_t v = 0; v + 1 < n; ++v) rows += x.dims[v + 1] * y.dims[v];
    sys.constraints = Matrix(rows, sys.unknowns);
    int row = 0;
    for (size_t v = 0; v + 1 < n; ++v) {
        // (f_v s_v - t_v f_{v+1})(i,j) = 0 for i < y.dims[v], j < x.dims[v+1]
        for (int i = 0; i < y.dims[v]; ++i)
            for (int j = 0; j < x.dims[v + 1]; ++j) {
                for (int c = 0; c < x.dims[v]; ++c)
                    if (!is_zero(x.maps[v].at(c, j)))
                        sys.constraints.at(row, sys.offset[v] + i * x.dims[v] + c) +=
                            x.maps[v].at(c, j);
                for (int c = 0; c < y.dims[v + 1]; ++c)
                    if (!is_zero(y.maps[v].at(i, c)))
                        sys.constraints.at(row, sys.offset[v + 1] + c * x.dims[v + 1] + j) -=
                            y.maps[v].at(i, c);
                ++row;
            }
    }
    return sys;
}

ModuleMap map_from_solution(const Representation& x, const Representation& y,
                            const HomSystem& sys, const Vec& sol) {
    ModuleMap f{x, y, {}};
    for (size_t v = 0; v < x.dims.size(); ++v) {
        Matrix c(y.dims[v], x.dims[v]);
        for (int i = 0; i < y.dims[v]; ++i)
            for (int j = 0; j < x.dims[v]; ++j)
                c.at(i, j) = sol[sys.offset[v] + i * x.dims[v] + j];
        f.components.push_back(std::move(c));
    }
    return f;
}

} // namespace

int hom_dim(const Algebra& a, const Representation& x, const Representation& y) {
    (void)a;
    HomSystem sys = hom_system(x, y);
    return sys.unknowns - rank(sys.constraints);
}

int hom_dim(const Algebra& a, Interval x, Interval y) {
    return hom_dim(a, realize(a, x), realize(a, y));
}

std::vector<ModuleMap> hom_basis(const Algebra& a, const Representation& x,
                                 const Representation& y) {
    (void)a;
    HomSystem sys = hom_system(x, y);
    std::vector<ModuleMap> basis;
    for (const Vec& v : kernel_basis(sys.constraints))
        basis.push_back(map_from_solution(x, y, sys, v));
    return basis;
}

int ext1_dim(const Algebra& a, Interval x, Interval y) {
    int b = a.block_containing(x.l, x.k);
    if (b < 0 || a.block_containing(y.l, y.k) < 0)
        throw std::invalid_argument("ext1_dim: invalid interval");
    int o = a.blocks[b].offset;
    if (x.l == o) return 0; // projective inside its block
    Representation pl = realize(a, {o, x.l});
    Representation pk = realize(a, {o, x.k});
    Representation ry = realize(a, y);

    std::vector<ModuleMap> hk = hom_basis(a, pk, ry);
    std::vector<ModuleMap> hl = hom_basis(a, pl, ry);
    if (hl.empty()) return 0;

    // Matrix of "restrict along P_l -> P_k" in the two bases; Ext^1 is its
    // cokernel since Hom(M_{l,k}, y) -> Hom(P_k, y) -> Hom(P_l, y) is exact
    // and Ext^1(P_k, y) = 0.
    ModuleMap inc = canonical_map(a, {o, x.l}, {o, x.k});
    auto flatten = [](const ModuleMap& f) {
        Vec v;
        for (const Matrix& c : f.components)
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) v.push_back(c.at(i, j));
        return v;
    };
    // Column c = coordinates of hk[c] o inc in the flattened Hom(P_l, y) space.
    Matrix basis_l(static_cast<int>(flatten(hl[0]).size()), static_cast<int>(hl.size()));
    for (size_t c = 0; c < hl.size(); ++c) {
        Vec v = flatten(hl[c]);
        for (size_t i = 0; i < v.size(); ++i) basis_l.at(static_cast<int>(i), static_cast<int>(c)) = v[i];
    }
    Matrix restricted(basis_l.rows(), static_cast<int>(hk.size()));
    for (size_t c = 0; c < hk.size(); ++c) {
        ModuleMap comp{inc.source, ry, {}};
        for (size_t v = 0; v < inc.components.size(); ++v)
            comp.components.push_back(hk[c].components[v] * inc.components[v]);
        Vec v = flatten(comp);
        for (size_t i = 0; i < v.size(); ++i)
            restricted.at(static_cast<int>(i), static_cast<int>(c)) = v[i];
    }
    // rank of the restriction map expressed inside Hom(P_l, y)
    Matrix joint = basis_l.hcat(restricted);
    int img = rank(joint) == rank(basis_l) ? rank(restricted) : -1;
    if (img < 0) throw std::logic_error("ext1_dim: restriction left Hom(P_l, y)");
    return static_cast<int>(hl.size()) - img;
}

ModuleMap canonical_map(const Algebra& a, Interval x, Interval y) {
    // Identity on the support overlap; defined exactly when l <= l' < k <= k'.
    if (!(x.l <= y.l && y.l < x.k && x.k <= y.k) ||
        a.block_containing(x.l, x.k) != a.block_containing(y.l, y.k) ||
        a.block_containing(x.l, x.k) < 0)
        throw std::invalid_argument("canonical_map: Hom space is zero");
    ModuleMap f{realize(a, x), realize(a, y), {}};
    for (int v = 0; v < a.n; ++v) {
        Matrix c(f.target.dims[v], f.source.dims[v]);
        if (y.l <= v && v < x.k) c.at(0, 0) = 1;
        f.components.push_back(std::move(c));
    }
    if (!f.commutes()) throw std::logic_error("canonical_map: squares do not commute");
    return f;
}

std::pair<Representation, Representation> kernel_coker(const ModuleMap& f) {
    size_t n = f.source.dims.size();

    // Kernel: bases per vertex, then arrow maps solved through the bases.
    std::vector<std::vector<Vec>> kb(n);
    Representation ker;
    for (size_t v = 0; v < n; ++v) {
        kb[v] = kernel_basis(f.components[v]);
        ker.dims.push_back(static_cast<int>(kb[v].size()));
    }
    for (size_t v = 0; v + 1 < n; ++v) {
        Matrix m(ker.dims[v], ker.dims[v + 1]);
        // source arrow maps kernel into kernel; express image in kb[v]
        Matrix basis_v(f.source.dims[v], ker.dims[v]);
        for (int j = 0; j < ker.dims[v]; ++j)
            for (int i = 0; i < f.source.dims[v]; ++i) basis_v.at(i, j) = kb[v][j][i];
        for (int j = 0; j < ker.dims[v + 1]; ++j) {
            Vec img = f.source.maps[v].apply(kb[v + 1][j]);
            auto coords = solve(basis_v, img);
            if (!coords) throw std::logic_error("kernel_coker: kernel not arrow-stable");
            for (int i = 0; i < ker.dims[v]; ++i) m.at(i, j) = (*coords)[i];
        }
        ker.maps.push_back(std::move(m));
    }

    // Cokernel: projection/section per vertex, arrow maps conjugated through.
    std::vector<CokernelData> ck(n);
    Representation cok;
    for (size_t v = 0; v < n; ++v) {
        ck[v] = cokernel(f.components[v]);
        cok.dims.push_back(ck[v].projection.rows());
    }
    for (size_t v = 0; v + 1 < n; ++v)
        cok.maps.push_back(ck[v].projection * (f.target.maps[v] * ck[v + 1].section));
    return {ker, cok};
}

Representation pushout_extension(const Algebra& a, Interval x, Interval y,
                                 int class_index) {
    int e = ext1_dim(a, x, y);
    if (class_index < 0 || class_index >= e)
        throw std::invalid_argument("pushout_extension: no such extension class");
    int b = a.block_containing(x.l, x.k);
    int o = a.blocks[b].offset;

    // 0 -> P_l -> P_k -> x -> 0 pushed along the canonical P_l -> y.
    // (Thin Ext spaces: the class index can only be 0 and the representing
    // map P_l -> y is the canonical one.)
    ModuleMap inc = canonical_map(a, {o, x.l}, {o, x.k});
    ModuleMap xi = canonical_map(a, {o, x.l}, y);
    Representation target = direct_sum(inc.target, xi.target);
    ModuleMap m{inc.source, target, {}};
    for (int v = 0; v < a.n; ++v) {
        Matrix c(target.dims[v], inc.source.dims[v]);
        for (int i = 0; i < inc.target.dims[v]; ++i)
            for (int j = 0; j < inc.source.dims[v]; ++j) c.at(i, j) = inc.components[v].at(i, j);
        for (int i = 0; i < xi.target.dims[v]; ++i)
            for (int j = 0; j < inc.source.dims[v]; ++j)
                c.at(inc.target.dims[v] + i, j) = -xi.components[v].at(i, j);
        m.components.push_back(std::move(c));
    }
    auto [ker, cok] = kernel_coker(m);
    if (ker.total_dim() != 0) throw std::logic_error("pushout_extension: presentation not injective");
    return cok;
}

std::map<Interval, int> decompose(const Algebra& a, const Representation& r) {
    std::vector<Interval> ivs = a.intervals();
    if (r.total_dim() == 0) return {};

    // Multiplicities solve hom(X, r) = sum_Y c_Y hom(X, Y); the Hom matrix is
    // unitriangular in a directed order, hence invertible.
    int m = static_cast<int>(ivs.size());
    Matrix h(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h.at(i, j) = hom_dim(a, ivs[i], ivs[j]);
    Vec profile(m);
    for (int i = 0; i < m; ++i)
        profile[i] = hom_dim(a, realize(a, ivs[i]), r);
    auto sol = solve(h, profile);
    if (!sol) throw std::logic_error("decompose: Hom profile inconsistent");

    std::map<Interval, int> mult;
    std::vector<int> total(a.n, 0);
    for (int j = 0; j < m; ++j) {
        const Rational& c = (*sol)[j];
        if (is_zero(c)) continue;
        if (den(c) != 1 || num(c) < 0)
            throw std::logic_error("decompose: non-integral multiplicity");
        int cnt = static_cast<int>(num(c));
        mult[ivs[j]] = cnt;
        for (int v = ivs[j].l; v < ivs[j].k; ++v) total[v] += cnt;
    }
    if (total != r.dims) throw std::logic_error("decompose: dimension vectors disagree");
    return mult;
}

} // namespace typea
