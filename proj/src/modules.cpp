#include "silted/modules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "silted/error.hpp"

namespace silted {

std::size_t ModuleRep::total_dim() const {
    std::size_t s = 0;
    for (int d : dims) s += static_cast<std::size_t>(d);
    return s;
}

long tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

bool is_positive_root(const Quiver& q, const DimVector& d) {
    if (d.size() != q.size() || d.is_zero()) return false;
    for (int x : d.values())
        if (x < 0) return false;
    return tits_form(q, d) == 1;
}

std::vector<DimVector> indecomposables(const Quiver& q) {
    dynkin_type(q);
    const std::size_t n = q.size();
    std::set<DimVector> roots;
    std::deque<DimVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        roots.insert(DimVector::unit(n, i));
        queue.push_back(DimVector::unit(n, i));
    }
    while (!queue.empty()) {
        DimVector d = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            DimVector e = d;
            ++e[i];
            if (tits_form(q, e) == 1 && roots.insert(e).second) queue.push_back(e);
        }
    }
    return {roots.begin(), roots.end()};
}

DimVector projective_dim(const Quiver& q, std::size_t i) {
    const RatMatrix c = cartan_matrix(q);
    std::vector<int> v(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) v[j] = static_cast<int>(c(i, j).get_num().get_si());
    return DimVector(std::move(v));
}

DimVector injective_dim(const Quiver& q, std::size_t i) {
    const RatMatrix c = cartan_matrix(q);
    std::vector<int> v(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) v[j] = static_cast<int>(c(j, i).get_num().get_si());
    return DimVector(std::move(v));
}

DimVector simple_dim(const Quiver& q, std::size_t i) { return DimVector::unit(q.size(), i); }

std::optional<std::size_t> projective_vertex(const Quiver& q, const DimVector& d) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (projective_dim(q, i) == d) return i;
    return std::nullopt;
}

std::optional<std::size_t> injective_vertex(const Quiver& q, const DimVector& d) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (injective_dim(q, i) == d) return i;
    return std::nullopt;
}

ModuleRep zero_rep(const Quiver& q) {
    ModuleRep m;
    m.dims.assign(q.size(), 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) m.maps.emplace_back(0, 0);
    return m;
}

ModuleRep simple_rep(const Quiver& q, std::size_t i) {
    ModuleRep m;
    m.dims.assign(q.size(), 0);
    m.dims[i] = 1;
    for (const auto& a : q.arrows()) m.maps.emplace_back(m.dims[a.source], m.dims[a.target]);
    return m;
}

ModuleRep projective_rep(const Quiver& q, std::size_t i) {
    const PathAlgebra alg(q);
    ModuleRep m;
    for (std::size_t j = 0; j < q.size(); ++j) m.dims.push_back(static_cast<int>(alg.piece_dim(i, j)));
    // Basis of P(i)_j: paths i ~> j. The arrow a: j -> k sends p to p*a.
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& ar = q.arrows()[a];
        RatMatrix mat(m.dims[ar.source], m.dims[ar.target]);
        const std::size_t arrow_path = *alg.find({a});
        for (std::size_t p : alg.piece(i, ar.source)) mat(alg.position(p), alg.position(*alg.concat(p, arrow_path))) = 1;
        m.maps.push_back(std::move(mat));
    }
    return m;
}

ModuleRep injective_rep(const Quiver& q, std::size_t i) {
    const PathAlgebra alg(q);
    ModuleRep m;
    for (std::size_t j = 0; j < q.size(); ++j) m.dims.push_back(static_cast<int>(alg.piece_dim(j, i)));
    // I(i)_j = D(e_j A e_i) with the dual basis of paths j ~> i; (phi a)(r) = phi(a r).
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& ar = q.arrows()[a];
        RatMatrix mat(m.dims[ar.source], m.dims[ar.target]);
        const std::size_t arrow_path = *alg.find({a});
        for (std::size_t r : alg.piece(ar.target, i)) {
            const std::size_t p = *alg.concat(arrow_path, r);
            mat(alg.position(p), alg.position(r)) = 1;
        }
        m.maps.push_back(std::move(mat));
    }
    return m;
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
    ModuleRep s;
    for (std::size_t i = 0; i < m.dims.size(); ++i) s.dims.push_back(m.dims[i] + n.dims[i]);
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const RatMatrix& x = m.maps[a];
        const RatMatrix& y = n.maps[a];
        RatMatrix z(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) z(r, c) = x(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) z(x.rows() + r, x.cols() + c) = y(r, c);
        s.maps.push_back(std::move(z));
    }
    return s;
}

bool is_representation(const Quiver& q, const ModuleRep& m) {
    if (m.dims.size() != q.size() || m.maps.size() != q.arrows().size()) return false;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const Arrow& ar = q.arrows()[a];
        if (m.maps[a].rows() != static_cast<std::size_t>(m.dims[ar.source]) ||
            m.maps[a].cols() != static_cast<std::size_t>(m.dims[ar.target]))
            return false;
    }
    return true;
}

namespace {

// Column offsets of the unknowns f_i inside the flattened Hom vector.
std::vector<std::size_t> hom_offsets(const ModuleRep& m, const ModuleRep& n) {
    std::vector<std::size_t> off(m.dims.size() + 1, 0);
    for (std::size_t i = 0; i < m.dims.size(); ++i)
        off[i + 1] = off[i] + static_cast<std::size_t>(m.dims[i]) * static_cast<std::size_t>(n.dims[i]);
    return off;
}

// Matrix of (f_i) |-> (M_a f_t - f_s N_a)_a.
RatMatrix intertwiner(const Quiver& q, const ModuleRep& m, const ModuleRep& n) {
    const auto off = hom_offsets(m, n);
    std::size_t eqs = 0;
    for (const auto& a : q.arrows()) eqs += static_cast<std::size_t>(m.dims[a.source]) * n.dims[a.target];
    RatMatrix d(eqs, off.back());
    std::size_t row0 = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        const std::size_t ms = m.dims[a.source], nt = n.dims[a.target];
        const std::size_t mt = m.dims[a.target], ns = n.dims[a.source];
        const RatMatrix& ma = m.maps[ai];
        const RatMatrix& na = n.maps[ai];
        for (std::size_t r = 0; r < ms; ++r)
            for (std::size_t c = 0; c < nt; ++c) {
                const std::size_t eq = row0 + r * nt + c;
                // (M_a f_t)(r,c) = sum_k M_a(r,k) f_t(k,c)
                for (std::size_t k = 0; k < mt; ++k)
                    if (sgn(ma(r, k)) != 0) d(eq, off[a.target] + k * nt + c) += ma(r, k);
                // (f_s N_a)(r,c) = sum_k f_s(r,k) N_a(k,c)
                for (std::size_t k = 0; k < ns; ++k)
                    if (sgn(na(k, c)) != 0) d(eq, off[a.source] + r * ns + k) -= na(k, c);
            }
        row0 += ms * nt;
    }
    return d;
}

}  // namespace

std::vector<Morphism> hom_basis(const Quiver& q, const ModuleRep& m, const ModuleRep& n) {
    const auto off = hom_offsets(m, n);
    std::vector<Morphism> out;
    for (const auto& v : linalg::kernel_vectors(intertwiner(q, m, n))) {
        Morphism f;
        for (std::size_t i = 0; i < m.dims.size(); ++i) {
            RatMatrix fi(m.dims[i], n.dims[i]);
            for (std::size_t r = 0; r < fi.rows(); ++r)
                for (std::size_t c = 0; c < fi.cols(); ++c) fi(r, c) = v[off[i] + r * fi.cols() + c];
            f.push_back(std::move(fi));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Quiver& q, const ModuleRep& m, const ModuleRep& n) {
    const RatMatrix d = intertwiner(q, m, n);
    return d.cols() - linalg::rank(d);
}

std::size_t ext1_dim(const Quiver& q, const ModuleRep& m, const ModuleRep& n) {
    const RatMatrix d = intertwiner(q, m, n);
    return d.rows() - linalg::rank(d);
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: morphisms over different quivers");
    Morphism h;
    for (std::size_t i = 0; i < f.size(); ++i) h.push_back(f[i] * g[i]);
    return h;
}

Vec flatten(const Morphism& f) {
    Vec v;
    for (const auto& m : f)
        for (const auto& x : m.entries()) v.push_back(x);
    return v;
}

ModuleRep build_representation(const Quiver& q, const DimVector& d) {
    if (!is_positive_root(q, d)) throw std::invalid_argument("build_representation: " + d.to_string() + " is not a positive root");
    ModuleRep m;
    m.dims = d.values();
    for (const auto& a : q.arrows()) {
        RatMatrix x(d[a.source], d[a.target]);
        for (std::size_t k = 0; k < std::min(x.rows(), x.cols()); ++k) x(k, k) = 1;
        m.maps.push_back(std::move(x));
    }
    if (hom_dim(q, m, m) == 1) return m;
    std::mt19937 gen(0x5eed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (auto& x : m.maps)
            for (std::size_t r = 0; r < x.rows(); ++r)
                for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = static_cast<long>(gen() % 5) - 2;
        if (hom_dim(q, m, m) == 1) return m;
    }
    throw AssertionFailure("no indecomposable found for root " + d.to_string());
}

std::optional<DimVector> tau(const Quiver& q, const DimVector& d) {
    if (projective_vertex(q, d)) return std::nullopt;
    const RatMatrix phi = coxeter_matrix(q);
    std::vector<int> out(q.size(), 0);
    for (std::size_t j = 0; j < q.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) s += d[i] * phi(i, j);
        out[j] = static_cast<int>(s.get_num().get_si());
    }
    return DimVector(std::move(out));
}

std::optional<DimVector> tau_inverse(const Quiver& q, const DimVector& d) {
    if (injective_vertex(q, d)) return std::nullopt;
    const RatMatrix inv = *linalg::inverse(coxeter_matrix(q));
    std::vector<int> out(q.size(), 0);
    for (std::size_t j = 0; j < q.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < q.size(); ++i) s += d[i] * inv(i, j);
        out[j] = static_cast<int>(s.get_num().get_si());
    }
    return DimVector(std::move(out));
}

std::optional<DimVector> tau_nakayama(const Quiver& q, const DimVector& d) {
    if (projective_vertex(q, d)) return std::nullopt;
    const ModuleRep m = build_representation(q, d);
    std::vector<int> out(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const ModuleRep s = simple_rep(q, i);
        const long k = static_cast<long>(ext1_dim(q, m, s)) - static_cast<long>(hom_dim(q, m, s));
        const DimVector inj = injective_dim(q, i);
        for (std::size_t j = 0; j < q.size(); ++j) out[j] += static_cast<int>(k * inj[j]);
    }
    return DimVector(std::move(out));
}

std::optional<DimVector> tau_inverse_nakayama(const Quiver& q, const DimVector& d) {
    if (injective_vertex(q, d)) return std::nullopt;
    const ModuleRep m = build_representation(q, d);
    std::vector<int> out(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const ModuleRep s = simple_rep(q, i);
        const long k = static_cast<long>(ext1_dim(q, s, m)) - static_cast<long>(hom_dim(q, s, m));
        const DimVector proj = projective_dim(q, i);
        for (std::size_t j = 0; j < q.size(); ++j) out[j] += static_cast<int>(k * proj[j]);
    }
    return DimVector(std::move(out));
}

std::string IndecomposableId::to_string() const {
    return is_module() ? dim.to_string() : dim.to_string() + "[1]";
}

std::optional<std::size_t> ArQuiver::find(const IndecomposableId& id) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == id) return v;
    return std::nullopt;
}

std::optional<std::size_t> ArQuiver::tau_of(std::size_t v) const {
    for (const auto& [x, t] : tau_pairs)
        if (x == v) return t;
    return std::nullopt;
}

std::vector<std::size_t> ArQuiver::predecessors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [s, t] : arrows)
        if (t == v) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> ArQuiver::successors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [s, t] : arrows)
        if (s == v) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Slice of P(i): for an arrow i -> j there is an irreducible map
// P(j) -> P(i), so P(i) sits one slice to the right of P(j).
std::vector<int> projective_slices(const Quiver& q) {
    const std::size_t n = q.size();
    std::vector<int> x(n, 0);
    std::vector<bool> placed(n, false);
    for (const auto& comp : q.components()) {
        std::deque<std::size_t> queue{comp.front()};
        placed[comp.front()] = true;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (const auto& a : q.arrows()) {
                if (a.source == v && !placed[a.target]) {
                    x[a.target] = x[v] - 1;
                    placed[a.target] = true;
                    queue.push_back(a.target);
                } else if (a.target == v && !placed[a.source]) {
                    x[a.source] = x[v] + 1;
                    placed[a.source] = true;
                    queue.push_back(a.source);
                }
            }
        }
    }
    return x;
}

}  // namespace

ArQuiver ar_quiver_mod(const Quiver& q) {
    ArQuiver ar;
    const auto dims = indecomposables(q);
    for (const auto& d : dims) ar.vertices.push_back(IndecomposableId::module(d));
    const std::size_t m = dims.size();

    std::vector<ModuleRep> reps;
    for (const auto& d : dims) reps.push_back(build_representation(q, d));
    std::vector<std::vector<std::vector<Morphism>>> hom(m, std::vector<std::vector<Morphism>>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) hom[x][y] = hom_basis(q, reps[x], reps[y]);

    for (std::size_t x = 0; x < m; ++x) check(hom[x][x].size() == 1, "indecomposable with non-trivial endomorphisms: " + dims[x].to_string());
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            if (x == y || hom[x][y].empty()) continue;
            // rad(X,Y) = Hom(X,Y) for X != Y; rad^2 is spanned by composites
            // through a third indecomposable.
            std::size_t width = flatten(hom[x][y][0]).size();
            linalg::EchelonBasis rad2(width);
            for (std::size_t z = 0; z < m; ++z) {
                if (z == x || z == y) continue;
                for (const auto& f : hom[x][z])
                    for (const auto& g : hom[z][y]) rad2.insert(flatten(compose(f, g)));
            }
            const std::size_t irr = hom[x][y].size() - rad2.dim();
            check(irr <= 1, "irreducible map of multiplicity > 1 between " + dims[x].to_string() + " and " + dims[y].to_string());
            if (irr == 1) ar.arrows.emplace_back(x, y);
        }

    for (std::size_t x = 0; x < m; ++x)
        if (auto t = tau(q, dims[x])) ar.tau_pairs.emplace_back(x, *ar.find(IndecomposableId::module(*t)));

    // Every indecomposable is tau^{-k} P(i) for a unique (i, k).
    const auto px = projective_slices(q);
    ar.slice.assign(m, 0);
    ar.row.assign(m, 0);
    std::vector<bool> seen(m, false);
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::optional<DimVector> d = projective_dim(q, i);
        int k = 0;
        while (d) {
            const std::size_t v = *ar.find(IndecomposableId::module(*d));
            check(!seen[v], "tau-orbits overlap at " + d->to_string());
            seen[v] = true;
            ar.slice[v] = px[i] + 2 * k;
            ar.row[v] = static_cast<int>(i);
            d = tau_inverse(q, *d);
            ++k;
        }
    }
    check(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), "indecomposable outside the preprojective component");
    if (m) {
        const int lo = *std::min_element(ar.slice.begin(), ar.slice.end());
        for (auto& s : ar.slice) s -= lo;
    }
    return ar;
}

ArQuiver ar_quiver_two_term(const Quiver& q) {
    ArQuiver ar = ar_quiver_mod(q);
    const std::size_t m = ar.vertices.size();
    std::vector<std::size_t> inj(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        ar.vertices.push_back(IndecomposableId::shifted(q, i));
        inj[i] = *ar.find(IndecomposableId::module(injective_dim(q, i)));
    }
    const auto mod_arrows = ar.arrows;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& [s, t] : mod_arrows)
            if (s == inj[i]) ar.arrows.emplace_back(t, m + i);
    for (const auto& a : q.arrows()) ar.arrows.emplace_back(m + a.target, m + a.source);
    std::sort(ar.arrows.begin(), ar.arrows.end());
    for (std::size_t i = 0; i < q.size(); ++i) {
        ar.tau_pairs.emplace_back(m + i, inj[i]);
        ar.slice.push_back(ar.slice[inj[i]] + 2);
        ar.row.push_back(ar.row[inj[i]]);
    }
    return ar;
}

bool meshes_complete(const ArQuiver& ar) {
    for (const auto& [x, t] : ar.tau_pairs)
        if (ar.predecessors(x) != ar.successors(t)) return false;
    return true;
}

}  // namespace silted
