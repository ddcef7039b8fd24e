#include "silted/complexes.hpp"

#include <stdexcept>

#include "silted/error.hpp"

namespace silted {

ProjMap ProjMap::zero(const PathAlgebra& alg, std::vector<std::size_t> source, std::vector<std::size_t> target) {
    ProjMap f;
    f.entries.resize(target.size());
    for (std::size_t r = 0; r < target.size(); ++r)
        for (std::size_t c = 0; c < source.size(); ++c) f.entries[r].push_back(alg.zero(target[r], source[c]));
    f.source = std::move(source);
    f.target = std::move(target);
    return f;
}

bool ProjMap::is_zero() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

ProjMap compose(const PathAlgebra& alg, const ProjMap& f, const ProjMap& g) {
    if (f.target != g.source) throw std::invalid_argument("compose: middle objects differ");
    ProjMap h = ProjMap::zero(alg, f.source, g.target);
    for (std::size_t r = 0; r < g.target.size(); ++r)
        for (std::size_t c = 0; c < f.source.size(); ++c)
            for (std::size_t k = 0; k < f.target.size(); ++k) {
                if (g.entries[r][k].is_zero() || f.entries[k][c].is_zero()) continue;
                const PathVector p = alg.multiply(g.entries[r][k], f.entries[k][c]);
                for (std::size_t t = 0; t < p.coeffs.size(); ++t) h.entries[r][c].coeffs[t] += p.coeffs[t];
            }
    return h;
}

HomLayout::HomLayout(const PathAlgebra& alg, std::vector<std::size_t> source, std::vector<std::size_t> target)
    : alg_(&alg), source_(std::move(source)), target_(std::move(target)) {
    offsets_.push_back(0);
    for (std::size_t r = 0; r < target_.size(); ++r)
        for (std::size_t c = 0; c < source_.size(); ++c) offsets_.push_back(offsets_.back() + alg.piece_dim(target_[r], source_[c]));
}

Vec HomLayout::pack(const ProjMap& f) const {
    if (f.source != source_ || f.target != target_) throw std::invalid_argument("HomLayout::pack: shape mismatch");
    Vec v(dim());
    std::size_t k = 0;
    for (std::size_t r = 0; r < target_.size(); ++r)
        for (std::size_t c = 0; c < source_.size(); ++c, ++k)
            for (std::size_t t = 0; t < f.entries[r][c].coeffs.size(); ++t) v[offsets_[k] + t] = f.entries[r][c].coeffs[t];
    return v;
}

ProjMap HomLayout::unpack(const Vec& v) const {
    ProjMap f = ProjMap::zero(*alg_, source_, target_);
    std::size_t k = 0;
    for (std::size_t r = 0; r < target_.size(); ++r)
        for (std::size_t c = 0; c < source_.size(); ++c, ++k)
            for (std::size_t t = 0; t < f.entries[r][c].coeffs.size(); ++t) f.entries[r][c].coeffs[t] = v[offsets_[k] + t];
    return f;
}

ProjMap HomLayout::basis_element(std::size_t k) const {
    Vec v(dim());
    v.at(k) = 1;
    return unpack(v);
}

namespace {

// Element of P(i)_k = e_i A e_k, as coordinates over piece(i, k); the map
// P(c) -> P(r) given by x in e_r A e_c sends p to x*p.
RatMatrix vertex_component(const PathAlgebra& alg, const ProjMap& f, std::size_t k) {
    std::vector<std::size_t> row_off{0}, col_off{0};
    for (auto t : f.target) row_off.push_back(row_off.back() + alg.piece_dim(t, k));
    for (auto s : f.source) col_off.push_back(col_off.back() + alg.piece_dim(s, k));
    RatMatrix m(row_off.back(), col_off.back());
    for (std::size_t r = 0; r < f.target.size(); ++r)
        for (std::size_t c = 0; c < f.source.size(); ++c) {
            const PathVector& x = f.entries[r][c];
            if (x.is_zero()) continue;
            const auto& in = alg.piece(f.source[c], k);
            for (std::size_t j = 0; j < in.size(); ++j) {
                const PathVector y = alg.multiply(x, alg.unit_vector(in[j]));
                for (std::size_t t = 0; t < y.coeffs.size(); ++t) m(row_off[r] + t, col_off[c] + j) += y.coeffs[t];
            }
        }
    return m;
}

// m * p for m in M_i and a path p: i ~> k.
Vec act_path(const ModuleRep& m, const Path& p, Vec v) {
    for (std::size_t a : p.arrows) {
        const RatMatrix& ma = m.maps[a];
        Vec w(ma.cols());
        for (std::size_t r = 0; r < ma.rows(); ++r) {
            if (sgn(v[r]) == 0) continue;
            for (std::size_t c = 0; c < ma.cols(); ++c) w[c] += v[r] * ma(r, c);
        }
        v = std::move(w);
    }
    return v;
}

}  // namespace

TwoTermComplex resolve(const PathAlgebra& alg, const ModuleRep& m) {
    const Quiver& q = alg.quiver();
    const std::size_t n = q.size();

    // Top of M: at each vertex, standard basis vectors outside rad M.
    struct Gen { std::size_t vertex; Vec v; };
    std::vector<Gen> gens;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t dk = static_cast<std::size_t>(m.dims[k]);
        linalg::EchelonBasis span(dk);
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrows()[a].target == k)
                for (std::size_t r = 0; r < m.maps[a].rows(); ++r) span.insert(m.maps[a].row(r));
        for (std::size_t b = 0; b < dk; ++b) {
            Vec e(dk);
            e[b] = 1;
            if (span.insert(e)) gens.push_back({k, e});
        }
    }

    TwoTermComplex x;
    for (const auto& g : gens) x.deg_0.push_back(g.vertex);

    // Kernel of P0 -> M, vertex by vertex, inside (+)_g piece(j_g, k).
    std::vector<std::vector<Vec>> kernel(n);
    std::vector<std::vector<std::size_t>> offs(n);
    for (std::size_t k = 0; k < n; ++k) {
        offs[k].push_back(0);
        for (const auto& g : gens) offs[k].push_back(offs[k].back() + alg.piece_dim(g.vertex, k));
        RatMatrix pi(static_cast<std::size_t>(m.dims[k]), offs[k].back());
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& paths = alg.piece(gens[gi].vertex, k);
            for (std::size_t j = 0; j < paths.size(); ++j) {
                const Vec img = act_path(m, alg.path(paths[j]), gens[gi].v);
                for (std::size_t r = 0; r < img.size(); ++r) pi(r, offs[k][gi] + j) = img[r];
            }
        }
        kernel[k] = linalg::kernel_vectors(pi);
    }

    // Top of the kernel: generators not in sum over arrows of K_i * a.
    struct KGen { std::size_t vertex; Vec v; };
    std::vector<KGen> kgens;
    for (std::size_t k = 0; k < n; ++k) {
        linalg::EchelonBasis span(offs[k].back());
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const Arrow& ar = q.arrows()[a];
            if (ar.target != k) continue;
            const std::size_t arrow_path = *alg.find({a});
            for (const auto& v : kernel[ar.source]) {
                Vec w(offs[k].back());
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    const auto& paths = alg.piece(gens[gi].vertex, ar.source);
                    for (std::size_t j = 0; j < paths.size(); ++j) {
                        const Rational& c = v[offs[ar.source][gi] + j];
                        if (sgn(c) == 0) continue;
                        const std::size_t p = *alg.concat(paths[j], arrow_path);
                        w[offs[k][gi] + alg.position(p)] += c;
                    }
                }
                span.insert(std::move(w));
            }
        }
        for (const auto& v : kernel[k])
            if (span.insert(v)) kgens.push_back({k, v});
    }

    for (const auto& h : kgens) x.deg_minus1.push_back(h.vertex);
    x.differential = ProjMap::zero(alg, x.deg_minus1, x.deg_0);
    for (std::size_t c = 0; c < kgens.size(); ++c)
        for (std::size_t r = 0; r < gens.size(); ++r) {
            PathVector& e = x.differential.entries[r][c];
            for (std::size_t t = 0; t < e.coeffs.size(); ++t) e.coeffs[t] = kgens[c].v[offs[kgens[c].vertex][r] + t];
        }

    // Over a hereditary algebra the kernel is projective, so the cover is an
    // isomorphism onto it.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p1 = 0;
        for (auto v : x.deg_minus1) p1 += alg.piece_dim(v, k);
        check(p1 == kernel[k].size(), "resolve: syzygy is not projective");
    }
    return x;
}

TwoTermComplex shifted_projective(const PathAlgebra& alg, std::size_t i) {
    TwoTermComplex x;
    x.deg_minus1 = {i};
    x.differential = ProjMap::zero(alg, x.deg_minus1, x.deg_0);
    return x;
}

std::vector<int> homology_dims(const PathAlgebra& alg, const TwoTermComplex& x, int degree) {
    std::vector<int> out;
    for (std::size_t k = 0; k < alg.quiver().size(); ++k) {
        const RatMatrix d = vertex_component(alg, x.differential, k);
        const std::size_t r = linalg::rank(d);
        out.push_back(static_cast<int>((degree == 0 ? d.rows() : d.cols()) - r));
    }
    return out;
}

HomClassBasis::HomClassBasis(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, int shift)
    : shift_(shift) {
    const std::vector<std::size_t> none;
    if (shift == 0) {
        layouts_ = {HomLayout(alg, x.deg_minus1, y.deg_minus1), HomLayout(alg, x.deg_0, y.deg_0)};
    } else if (shift == 1) {
        layouts_ = {HomLayout(alg, x.deg_minus1, y.deg_0), HomLayout(alg, x.deg_0, none)};
    } else if (shift == -1) {
        layouts_ = {HomLayout(alg, x.deg_minus1, none), HomLayout(alg, x.deg_0, y.deg_minus1)};
    } else {
        layouts_ = {HomLayout(alg, x.deg_minus1, none), HomLayout(alg, x.deg_0, none)};
    }
    const std::size_t n1 = layouts_[0].dim(), n0 = layouts_[1].dim();
    const std::size_t total = n1 + n0;
    cycles_ = linalg::EchelonBasis(total);
    boundaries_ = linalg::EchelonBasis(total);
    classes_ = linalg::EchelonBasis(total);

    auto column = [&](std::size_t k) {
        ChainMap f;
        f.minus1 = k < n1 ? layouts_[0].basis_element(k) : layouts_[0].unpack(Vec(n1));
        f.zero = k >= n1 ? layouts_[1].basis_element(k - n1) : layouts_[1].unpack(Vec(n0));
        return f;
    };

    if (shift == 0) {
        // d_Y f^{-1} - f^0 d_X, in Hom(X^{-1}, Y^0).
        const HomLayout target(alg, x.deg_minus1, y.deg_0);
        RatMatrix cond(target.dim(), total);
        for (std::size_t k = 0; k < total; ++k) {
            const ChainMap f = column(k);
            const Vec a = target.pack(compose(alg, f.minus1, y.differential));
            const Vec b = target.pack(compose(alg, x.differential, f.zero));
            for (std::size_t r = 0; r < target.dim(); ++r) cond(r, k) = a[r] - b[r];
        }
        for (auto& v : linalg::kernel_vectors(cond)) cycles_.insert(std::move(v));
        // Homotopies h: X^0 -> Y^{-1} give (h d_X, d_Y h).
        const HomLayout hl(alg, x.deg_0, y.deg_minus1);
        for (std::size_t k = 0; k < hl.dim(); ++k) {
            const ProjMap h = hl.basis_element(k);
            ChainMap b{compose(alg, x.differential, h), compose(alg, h, y.differential)};
            boundaries_.insert(pack(b));
        }
    } else if (shift == 1) {
        for (std::size_t k = 0; k < total; ++k) {
            Vec e(total);
            e[k] = 1;
            cycles_.insert(std::move(e));
        }
        // (a, b) |-> a d_X - d_Y b with a: X^0 -> Y^0, b: X^{-1} -> Y^{-1}.
        const HomLayout al(alg, x.deg_0, y.deg_0);
        for (std::size_t k = 0; k < al.dim(); ++k) {
            ChainMap b{compose(alg, x.differential, al.basis_element(k)), layouts_[1].unpack(Vec(n0))};
            boundaries_.insert(pack(b));
        }
        const HomLayout bl(alg, x.deg_minus1, y.deg_minus1);
        for (std::size_t k = 0; k < bl.dim(); ++k) {
            const Vec v = layouts_[0].pack(compose(alg, bl.basis_element(k), y.differential));
            Vec neg(total);
            for (std::size_t t = 0; t < n1; ++t) neg[t] = -v[t];
            boundaries_.insert(std::move(neg));
        }
    } else if (shift == -1) {
        // g: X^0 -> Y^{-1} with d_Y g = 0 and g d_X = 0; no homotopies.
        const HomLayout t1(alg, x.deg_0, y.deg_0);
        const HomLayout t2(alg, x.deg_minus1, y.deg_minus1);
        RatMatrix cond(t1.dim() + t2.dim(), total);
        for (std::size_t k = 0; k < n0; ++k) {
            const ProjMap g = layouts_[1].basis_element(k);
            const Vec a = t1.pack(compose(alg, g, y.differential));
            const Vec b = t2.pack(compose(alg, x.differential, g));
            for (std::size_t r = 0; r < a.size(); ++r) cond(r, n1 + k) = a[r];
            for (std::size_t r = 0; r < b.size(); ++r) cond(a.size() + r, n1 + k) = b[r];
        }
        for (auto& v : linalg::kernel_vectors(cond)) cycles_.insert(std::move(v));
    }

    for (const auto& z : cycles_.rows()) {
        Vec r = boundaries_.reduce(z);
        if (!linalg::is_zero(r)) classes_.insert(std::move(r));
    }
    for (const auto& v : classes_.rows()) reps_.push_back(unpack(v));
}

ChainMap HomClassBasis::unpack(const Vec& v) const {
    const auto n1 = static_cast<std::ptrdiff_t>(layouts_[0].dim());
    return {layouts_[0].unpack(Vec(v.begin(), v.begin() + n1)), layouts_[1].unpack(Vec(v.begin() + n1, v.end()))};
}

ChainMap HomClassBasis::combination(const Vec& coords) const {
    Vec v(layouts_[0].dim() + layouts_[1].dim());
    for (std::size_t k = 0; k < reps_.size(); ++k) {
        if (sgn(coords[k]) == 0) continue;
        const auto& row = classes_.rows()[k];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += coords[k] * row[t];
    }
    return unpack(v);
}

Vec HomClassBasis::pack(const ChainMap& f) const {
    Vec v = layouts_[0].pack(f.minus1);
    const Vec w = layouts_[1].pack(f.zero);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

Vec HomClassBasis::coordinates(const ChainMap& f) const {
    const Vec v = pack(f);
    check(cycles_.contains(v), "coordinates requested for a map that is not a chain map");
    auto c = classes_.coordinates(boundaries_.reduce(v));
    check(c.has_value(), "chain map class outside the computed basis");
    return *c;
}

bool HomClassBasis::is_null_homotopic(const ChainMap& f) const { return linalg::is_zero(coordinates(f)); }

HomClassBasis hom_class_basis(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, int shift) {
    return HomClassBasis(alg, x, y, shift);
}

ChainMap identity_map(const PathAlgebra& alg, const TwoTermComplex& x) {
    ChainMap id{ProjMap::zero(alg, x.deg_minus1, x.deg_minus1), ProjMap::zero(alg, x.deg_0, x.deg_0)};
    for (std::size_t k = 0; k < x.deg_minus1.size(); ++k) id.minus1.entries[k][k].coeffs[0] = 1;
    for (std::size_t k = 0; k < x.deg_0.size(); ++k) id.zero.entries[k][k].coeffs[0] = 1;
    return id;
}

ChainMap compose(const PathAlgebra& alg, const ChainMap& f, const ChainMap& g) {
    return {compose(alg, f.minus1, g.minus1), compose(alg, f.zero, g.zero)};
}

Vec compose_classes(const PathAlgebra& alg, const HomClassBasis& xy, const Vec& f, const HomClassBasis& yz,
                    const Vec& g, const HomClassBasis& xz) {
    if (xy.shift() != 0 || yz.shift() != 0 || xz.shift() != 0)
        throw std::invalid_argument("compose_classes: only degree-0 classes compose");
    return xz.coordinates(compose(alg, xy.combination(f), yz.combination(g)));
}

bool is_chain_map(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, const ChainMap& f) {
    const ProjMap a = compose(alg, f.minus1, y.differential);
    const ProjMap b = compose(alg, x.differential, f.zero);
    for (std::size_t r = 0; r < a.entries.size(); ++r)
        for (std::size_t c = 0; c < a.entries[r].size(); ++c)
            if (a.entries[r][c] != b.entries[r][c]) return false;
    return true;
}

}  // namespace silted
