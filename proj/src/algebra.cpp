#include "silted/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "silted/error.hpp"

namespace silted {

FiniteAlgebra::FiniteAlgebra(std::vector<std::vector<std::size_t>> piece_dims) : dims_(std::move(piece_dims)) {
    const std::size_t n = dims_.size();
    for (std::size_t a = 0; a < n; ++a) {
        check(dims_[a].size() == n, "FiniteAlgebra: piece table is not square");
        check(dims_[a][a] == 1, "FiniteAlgebra: e_a B e_a must be one-dimensional");
    }
    table_.assign(n, std::vector<std::vector<std::vector<Vec>>>(n, std::vector<std::vector<Vec>>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                table_[a][b][c].assign(dims_[a][b] * dims_[b][c], Vec(dims_[a][c]));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t j = 0; j < dims_[a][c]; ++j) {
                table_[a][a][c][j][j] = 1;                 // e_a * y = y
                table_[a][c][c][j][j] = 1;                 // x * e_c = x
            }
}

std::size_t FiniteAlgebra::dim() const {
    std::size_t s = 0;
    for (const auto& row : dims_)
        for (auto d : row) s += d;
    return s;
}

const Vec& FiniteAlgebra::product(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j) const {
    return table_[a][b][c][i * dims_[b][c] + j];
}

void FiniteAlgebra::set_product(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, Vec v) {
    check(v.size() == dims_[a][c], "set_product: wrong length");
    table_[a][b][c][i * dims_[b][c] + j] = std::move(v);
}

Vec FiniteAlgebra::multiply(std::size_t a, std::size_t b, std::size_t c, const Vec& x, const Vec& y) const {
    Vec out(dims_[a][c]);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational s = x[i] * y[j];
            const Vec& p = product(a, b, c, i, j);
            for (std::size_t k = 0; k < out.size(); ++k)
                if (sgn(p[k]) != 0) out[k] += s * p[k];
        }
    }
    return out;
}

FiniteAlgebra FiniteAlgebra::restrict(const std::vector<std::size_t>& vs) const {
    const std::size_t m = vs.size();
    std::vector<std::vector<std::size_t>> d(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) d[a][b] = dims_[vs[a]][vs[b]];
    FiniteAlgebra r(d);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) r.table_[a][b][c] = table_[vs[a]][vs[b]][vs[c]];
    return r;
}

FiniteAlgebra FiniteAlgebra::opposite() const {
    const std::size_t n = dims_.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d[a][b] = dims_[b][a];
    FiniteAlgebra r(d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t i = 0; i < d[a][b]; ++i)
                    for (std::size_t j = 0; j < d[b][c]; ++j) r.set_product(a, b, c, i, j, product(c, b, a, j, i));
    return r;
}

bool FiniteAlgebra::is_associative() const {
    const std::size_t n = dims_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t i = 0; i < dims_[a][b]; ++i)
                        for (std::size_t j = 0; j < dims_[b][c]; ++j)
                            for (std::size_t k = 0; k < dims_[c][d]; ++k) {
                                Vec z(dims_[c][d]);
                                z[k] = 1;
                                Vec y(dims_[b][c]);
                                y[j] = 1;
                                Vec x(dims_[a][b]);
                                x[i] = 1;
                                const Vec left = multiply(a, c, d, multiply(a, b, c, x, y), z);
                                const Vec right = multiply(a, b, d, x, multiply(b, c, d, y, z));
                                if (left != right) return false;
                            }
    return true;
}

RatMatrix FiniteAlgebra::cartan() const {
    const std::size_t n = dims_.size();
    RatMatrix c(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) c(a, b) = static_cast<long>(dims_[a][b]);
    return c;
}

std::size_t BoundQuiverAlgebra::relation_count(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(),
                                                  [&](const PathVector& r) { return r.source == a && r.target == b; }));
}

namespace {

Vec unit(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

// Image of a path of the Gabriel quiver in B.
Vec evaluate(const FiniteAlgebra& b, const PathAlgebra& paths, const std::vector<Vec>& arrow_elements, std::size_t p) {
    const Path& path = paths.path(p);
    if (path.arrows.empty()) return unit(1, 0);
    const auto& arrows = paths.quiver().arrows();
    Vec cur = arrow_elements[path.arrows[0]];
    std::size_t at = arrows[path.arrows[0]].target;
    for (std::size_t k = 1; k < path.arrows.size(); ++k) {
        const Arrow& a = arrows[path.arrows[k]];
        cur = b.multiply(path.source, at, a.target, cur, arrow_elements[path.arrows[k]]);
        at = a.target;
    }
    return cur;
}

}  // namespace

BoundQuiverAlgebra present(const FiniteAlgebra& b, std::vector<int> labels) {
    const std::size_t n = b.vertices();
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back(static_cast<int>(a + 1));

    BoundQuiverAlgebra out;
    out.algebra = b;

    // Arrows a -> c: basis vectors of e_a B e_c independent modulo rad^2.
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (a == c || b.piece_dim(a, c) == 0) continue;
            linalg::EchelonBasis span(b.piece_dim(a, c));
            for (std::size_t m = 0; m < n; ++m) {
                if (m == a || m == c) continue;
                for (std::size_t i = 0; i < b.piece_dim(a, m); ++i)
                    for (std::size_t j = 0; j < b.piece_dim(m, c); ++j) span.insert(b.product(a, m, c, i, j));
            }
            for (std::size_t k = 0; k < b.piece_dim(a, c); ++k)
                if (span.insert(unit(b.piece_dim(a, c), k))) {
                    arrows.push_back({"a" + std::to_string(arrows.size() + 1), a, c});
                    out.arrow_elements.push_back(unit(b.piece_dim(a, c), k));
                }
        }
    Quiver gq;
    try {
        gq = Quiver(labels, arrows);
    } catch (const ParseError&) {
        throw AssertionFailure("Gabriel quiver has an oriented cycle; the radical is not the off-diagonal part");
    }
    out.paths = PathAlgebra(gq);
    const PathAlgebra& pa = out.paths;

    // Relation ideal piece by piece: kernel of evaluation on e_a KQ' e_c.
    std::vector<std::vector<std::vector<Vec>>> ideal(n, std::vector<std::vector<Vec>>(n));
    out.ideal_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            const auto& ps = pa.piece(a, c);
            RatMatrix phi(b.piece_dim(a, c), ps.size());
            for (std::size_t k = 0; k < ps.size(); ++k) {
                const Vec v = evaluate(b, pa, out.arrow_elements, ps[k]);
                for (std::size_t r = 0; r < v.size(); ++r) phi(r, k) = v[r];
            }
            check(linalg::rank(phi) == b.piece_dim(a, c), "arrows do not generate the algebra");
            ideal[a][c] = linalg::kernel_vectors(phi);
            out.ideal_dims[a][c] = ideal[a][c].size();
        }

    // Minimal generators: I modulo (arrows * I + I * arrows).
    const auto& qa = gq.arrows();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (ideal[a][c].empty()) continue;
            linalg::EchelonBasis j(pa.piece_dim(a, c));
            for (std::size_t k = 0; k < qa.size(); ++k) {
                const PathVector alpha = pa.unit_vector(*pa.find({k}));
                if (qa[k].source == a)
                    for (const auto& r : ideal[qa[k].target][c]) j.insert(pa.multiply(alpha, {qa[k].target, c, r}).coeffs);
                if (qa[k].target == c)
                    for (const auto& r : ideal[a][qa[k].source]) j.insert(pa.multiply({a, qa[k].source, r}, alpha).coeffs);
            }
            linalg::EchelonBasis gens(pa.piece_dim(a, c));
            for (const auto& v : ideal[a][c]) gens.insert(j.reduce(v));
            for (const auto& g : gens.rows()) out.relations.push_back({a, c, g});
        }

    // The generators must reproduce the whole ideal.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            linalg::EchelonBasis span(pa.piece_dim(k, l));
            for (const auto& g : out.relations)
                for (std::size_t p : pa.piece(k, g.source))
                    for (std::size_t p2 : pa.piece(g.target, l))
                        span.insert(pa.multiply(pa.multiply(pa.unit_vector(p), g), pa.unit_vector(p2)).coeffs);
            check(span.dim() == out.ideal_dims[k][l], "relations do not generate the kernel");
        }
    std::size_t quotient = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) quotient += pa.piece_dim(a, c) - out.ideal_dims[a][c];
    check(quotient == b.dim(), "dim KQ'/I differs from dim B");
    return out;
}

FiniteAlgebra endomorphism_table(const TwoTermCategory& cat, const SiltingObject& t) {
    const std::size_t n = t.summands.size();
    std::vector<std::size_t> idx;
    for (const auto& s : t.summands) idx.push_back(cat.index_of(s));
    std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) dims[a][b] = cat.hom(idx[b], idx[a]).dim();
    for (std::size_t a = 0; a < n; ++a)
        check(dims[a][a] == 1, "summand " + t.summands[a].to_string() + " has endomorphism ring of dimension " +
                                   std::to_string(dims[a][a]));
    FiniteAlgebra b(dims);
    const PathAlgebra& alg = cat.algebra();

    // Diagonal pieces use the identity as basis; lambda[a] is its coordinate
    // in the stored class basis.
    std::vector<Rational> lambda(n);
    for (std::size_t a = 0; a < n; ++a) {
        lambda[a] = cat.hom(idx[a], idx[a]).coordinates(identity_map(alg, cat.complex(idx[a])))[0];
        check(sgn(lambda[a]) != 0, "identity is null-homotopic");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == m || m == c) continue;
                const HomClassBasis& xb = cat.hom(idx[m], idx[a]);  // piece(a,m): T_m -> T_a
                const HomClassBasis& yb = cat.hom(idx[c], idx[m]);  // piece(m,c): T_c -> T_m
                const HomClassBasis& zb = cat.hom(idx[c], idx[a]);
                for (std::size_t i = 0; i < xb.dim(); ++i)
                    for (std::size_t j = 0; j < yb.dim(); ++j) {
                        Vec v = zb.coordinates(compose(alg, yb.map(j), xb.map(i)));
                        if (a == c) v[0] /= lambda[a];
                        b.set_product(a, m, c, i, j, std::move(v));
                    }
            }
    return b;
}

BoundQuiverAlgebra endomorphism_algebra(const TwoTermCategory& cat, const SiltingObject& t) {
    return present(endomorphism_table(cat, t));
}

Quiver gabriel_quiver(const BoundQuiverAlgebra& b) { return b.quiver(); }

std::vector<std::vector<std::size_t>> block_vertices(const BoundQuiverAlgebra& b) { return b.quiver().components(); }

std::vector<BoundQuiverAlgebra> blocks(const BoundQuiverAlgebra& b) {
    std::vector<BoundQuiverAlgebra> out;
    for (const auto& comp : block_vertices(b)) {
        std::vector<int> labels;
        for (auto v : comp) labels.push_back(b.quiver().label(v));
        out.push_back(present(b.algebra.restrict(comp), labels));
    }
    return out;
}

FiniteAlgebra monomial_algebra(const Quiver& q, const std::vector<std::vector<std::size_t>>& zero_relations) {
    const PathAlgebra pa(q);
    auto allowed = [&](const std::vector<std::size_t>& arrows) {
        for (const auto& r : zero_relations)
            if (std::search(arrows.begin(), arrows.end(), r.begin(), r.end()) != arrows.end()) return false;
        return true;
    };
    const std::size_t n = q.size();
    std::vector<std::vector<std::vector<std::size_t>>> basis(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t p = 0; p < pa.dim(); ++p)
        if (allowed(pa.path(p).arrows)) basis[pa.path(p).source][pa.path(p).target].push_back(p);
    std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) dims[a][c] = basis[a][c].size();
    FiniteAlgebra b(dims);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t c = 0; c < n; ++c) {
                if (a == m || m == c) continue;
                for (std::size_t i = 0; i < dims[a][m]; ++i)
                    for (std::size_t j = 0; j < dims[m][c]; ++j) {
                        Vec v(dims[a][c]);
                        const std::size_t p = *pa.concat(basis[a][m][i], basis[m][c][j]);
                        auto it = std::find(basis[a][c].begin(), basis[a][c].end(), p);
                        if (it != basis[a][c].end()) v[static_cast<std::size_t>(it - basis[a][c].begin())] = 1;
                        b.set_product(a, m, c, i, j, std::move(v));
                    }
            }
    return b;
}

FiniteAlgebra monomial_algebra_by_walks(const Quiver& q, const std::vector<std::vector<int>>& walks) {
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& w : walks) {
        std::vector<std::size_t> arrows;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const std::size_t s = q.index_of(w[k]), t = q.index_of(w[k + 1]);
            std::optional<std::size_t> found;
            for (std::size_t a = 0; a < q.arrows().size(); ++a)
                if (q.arrows()[a].source == s && q.arrows()[a].target == t) {
                    if (found) throw std::invalid_argument("walk is ambiguous: parallel arrows");
                    found = a;
                }
            if (!found) throw std::invalid_argument("walk uses a missing arrow");
            arrows.push_back(*found);
        }
        rels.push_back(std::move(arrows));
    }
    return monomial_algebra(q, rels);
}

CartanData cartan_data(const FiniteAlgebra& b) {
    CartanData d;
    d.cartan = b.cartan();
    const auto inv = linalg::inverse(d.cartan);
    check(inv.has_value(), "Cartan matrix is singular");
    const RatMatrix phi = -(inv->transpose() * d.cartan);
    for (const auto& c : linalg::characteristic_polynomial(phi)) {
        check(c.get_den() == 1, "Coxeter polynomial has a non-integral coefficient");
        d.coxeter_polynomial.push_back(c.get_num().get_si());
    }
    return d;
}

std::string polynomial_to_string(const std::vector<long>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const long c = coeffs[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << '-';
        const long a = c < 0 ? -c : c;
        if (a != 1 || k == 0) os << a;
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace silted
