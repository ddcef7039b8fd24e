#include "silted/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "silted/error.hpp"

namespace silted {

namespace {

// Submodule of the free module (+)_k e_{gens[k]} B, stored vertex by vertex.
struct Syzygy {
    std::vector<std::size_t> gens;
    std::vector<std::vector<std::size_t>> offs;  // offs[b][k]
    std::vector<std::vector<Vec>> basis;         // basis[b]

    Syzygy(const FiniteAlgebra& alg, std::vector<std::size_t> g) : gens(std::move(g)) {
        const std::size_t n = alg.vertices();
        offs.assign(n, {0});
        for (std::size_t b = 0; b < n; ++b)
            for (auto a : gens) offs[b].push_back(offs[b].back() + alg.piece_dim(a, b));
        basis.assign(n, {});
    }
    std::size_t width(std::size_t b) const { return offs[b].back(); }
    bool empty() const {
        return std::all_of(basis.begin(), basis.end(), [](const auto& v) { return v.empty(); });
    }

    // v * y for v in the component at b and y basis element j of piece(b,c).
    Vec act(const FiniteAlgebra& alg, const Vec& v, std::size_t b, std::size_t c, std::size_t j) const {
        Vec out(width(c));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const std::size_t a = gens[k];
            for (std::size_t i = 0; i < alg.piece_dim(a, b); ++i) {
                const Rational& x = v[offs[b][k] + i];
                if (sgn(x) == 0) continue;
                const Vec& p = alg.product(a, b, c, i, j);
                for (std::size_t t = 0; t < p.size(); ++t)
                    if (sgn(p[t]) != 0) out[offs[c][k] + t] += x * p[t];
            }
        }
        return out;
    }
};

}  // namespace

std::vector<SimpleResolution> resolve_simples(const FiniteAlgebra& alg, int cap) {
    const std::size_t n = alg.vertices();
    std::vector<SimpleResolution> out;
    for (std::size_t a = 0; a < n; ++a) {
        SimpleResolution res;
        res.vertex = a;
        res.multiplicity.push_back(std::vector<std::size_t>(n, 0));
        res.multiplicity[0][a] = 1;

        Syzygy k(alg, {a});
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) continue;
            for (std::size_t i = 0; i < alg.piece_dim(a, b); ++i) {
                Vec e(alg.piece_dim(a, b));
                e[i] = 1;
                k.basis[b].push_back(std::move(e));
            }
        }
        int step = 0;
        while (!k.empty()) {
            ++step;
            if (step > cap) throw AssertionFailure("resolution of a simple module exceeds length " + std::to_string(cap));
            // Top of the syzygy: complement of its radical at each vertex.
            struct Gen { std::size_t vertex; Vec v; };
            std::vector<Gen> tops;
            for (std::size_t c = 0; c < n; ++c) {
                linalg::EchelonBasis span(k.width(c));
                for (std::size_t b = 0; b < n; ++b) {
                    if (b == c) continue;
                    for (const auto& v : k.basis[b])
                        for (std::size_t j = 0; j < alg.piece_dim(b, c); ++j) span.insert(k.act(alg, v, b, c, j));
                }
                for (const auto& v : k.basis[c])
                    if (span.insert(v)) tops.push_back({c, v});
            }
            std::vector<std::size_t> row(n, 0);
            std::vector<std::size_t> gens;
            for (const auto& g : tops) {
                ++row[g.vertex];
                gens.push_back(g.vertex);
            }
            res.multiplicity.push_back(row);

            // Kernel of the projective cover.
            Syzygy next(alg, gens);
            for (std::size_t b = 0; b < n; ++b) {
                RatMatrix cover(k.width(b), next.width(b));
                for (std::size_t g = 0; g < tops.size(); ++g)
                    for (std::size_t j = 0; j < alg.piece_dim(tops[g].vertex, b); ++j) {
                        const Vec img = k.act(alg, tops[g].v, tops[g].vertex, b, j);
                        for (std::size_t t = 0; t < img.size(); ++t) cover(t, next.offs[b][g] + j) = img[t];
                    }
                check(linalg::rank(cover) == k.basis[b].size(), "projective cover is not onto the syzygy");
                next.basis[b] = linalg::kernel_vectors(cover);
            }
            k = std::move(next);
        }
        res.pd = step;
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<std::pair<std::size_t, int>> projective_dimension_of_simples(const FiniteAlgebra& b, int cap) {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& r : resolve_simples(b, cap)) out.emplace_back(r.vertex, r.pd);
    return out;
}

int global_dimension(const FiniteAlgebra& b, int cap) {
    int g = 0;
    for (const auto& r : resolve_simples(b, cap)) g = std::max(g, r.pd);
    return g;
}

std::vector<std::vector<std::size_t>> ext_matrix(const std::vector<SimpleResolution>& res, int k) {
    const std::size_t n = res.size();
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        if (k >= 0 && static_cast<std::size_t>(k) < res[a].multiplicity.size()) m[a] = res[a].multiplicity[k];
    return m;
}

std::string Fingerprint::hex() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (long x : data) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Fingerprint fingerprint(const BoundQuiverAlgebra& b, const std::vector<SimpleResolution>& res) {
    const std::size_t n = b.algebra.vertices();
    std::vector<std::vector<long>> arrows(n, std::vector<long>(n, 0));
    for (const auto& a : b.quiver().arrows()) ++arrows[a.source][a.target];
    const auto e2 = ext_matrix(res, 2);
    const auto e3 = ext_matrix(res, 3);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Fingerprint best;
    bool first = true;
    do {
        Fingerprint f;
        f.data.push_back(static_cast<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f.data.push_back(arrows[perm[i]][perm[j]]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f.data.push_back(static_cast<long>(b.algebra.piece_dim(perm[i], perm[j])));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f.data.push_back(static_cast<long>(e2[perm[i]][perm[j]]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f.data.push_back(static_cast<long>(e3[perm[i]][perm[j]]));
        for (std::size_t i = 0; i < n; ++i) f.data.push_back(res[perm[i]].pd);
        if (first || f < best) best = std::move(f);
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Fingerprint fingerprint(const BoundQuiverAlgebra& b) { return fingerprint(b, resolve_simples(b.algebra)); }

const std::map<std::vector<long>, DynkinComponent>& coxeter_table() {
    static const std::map<std::vector<long>, DynkinComponent> table = [] {
        std::vector<std::pair<DynkinComponent, Quiver>> gens;
        auto chain = [](int n) {
            std::vector<int> labels;
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v <= n; ++v) labels.push_back(v);
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            return std::make_pair(labels, edges);
        };
        for (int n = 1; n <= 8; ++n) {
            auto [l, e] = chain(n);
            gens.push_back({{'A', n}, Quiver::from_edges(l, e)});
        }
        for (int n = 4; n <= 8; ++n) {
            // 1 -> 3, 2 -> 3, 3 -> 4 -> ... -> n
            std::vector<int> l;
            for (int v = 1; v <= n; ++v) l.push_back(v);
            std::vector<std::pair<int, int>> e{{1, 3}, {2, 3}};
            for (int v = 3; v < n; ++v) e.emplace_back(v, v + 1);
            gens.push_back({{'D', n}, Quiver::from_edges(l, e)});
        }
        for (int n = 6; n <= 8; ++n) {
            // chain 1 -> ... -> n-1 with n attached to 3
            auto [l, e] = chain(n - 1);
            l.push_back(n);
            e.emplace_back(3, n);
            gens.push_back({{'E', n}, Quiver::from_edges(l, e)});
        }
        std::map<std::vector<long>, DynkinComponent> t;
        for (const auto& [type, q] : gens) {
            const DynkinType found = dynkin_type(q);
            check(found.components.size() == 1 && found.components[0] == type, "reference quiver has the wrong type");
            const auto poly = cartan_data(monomial_algebra(q, {})).coxeter_polynomial;
            check(t.emplace(poly, type).second, "two Dynkin types share a Coxeter polynomial");
        }
        return t;
    }();
    return table;
}

DynkinType tilted_type(const BoundQuiverAlgebra& block) {
    const auto poly = cartan_data(block.algebra).coxeter_polynomial;
    const auto& table = coxeter_table();
    auto it = table.find(poly);
    if (it == table.end()) throw AssertionFailure("no Dynkin type with Coxeter polynomial " + polynomial_to_string(poly));
    return DynkinType{{it->second}};
}

bool ClassificationRecord::strictly_shod() const {
    return std::any_of(blocks.begin(), blocks.end(), [](const BlockReport& b) { return b.strictly_shod; });
}

std::string ClassificationRecord::label() const {
    DynkinType tilted;
    std::size_t shod = 0;
    for (const auto& b : blocks) {
        if (b.strictly_shod) ++shod;
        else tilted.components.push_back(b.type);
    }
    std::string s;
    for (std::size_t k = 0; k < shod; ++k) s += (s.empty() ? "" : "⊔") + std::string("strictly shod");
    const std::string t = tilted.to_string();
    if (!t.empty()) s += (s.empty() ? "" : "⊔") + t;
    return s;
}

ClassificationRecord classify_algebra(const FiniteAlgebra& b) {
    ClassificationRecord rec;
    rec.algebra = present(b);
    rec.resolutions = resolve_simples(b);
    rec.fingerprint = fingerprint(rec.algebra, rec.resolutions);
    for (const auto& comp : block_vertices(rec.algebra)) {
        BlockReport br;
        br.vertices = comp;
        std::vector<int> labels;
        for (auto v : comp) {
            labels.push_back(rec.algebra.quiver().label(v));
            br.gl_dim = std::max(br.gl_dim, rec.resolutions[v].pd);
        }
        br.algebra = present(b.restrict(comp), labels);
        if (br.gl_dim > 3) throw AssertionFailure("block of global dimension " + std::to_string(br.gl_dim));
        if (br.gl_dim == 3) {
            br.strictly_shod = true;
        } else {
            br.type = tilted_type(br.algebra).components.at(0);
        }
        rec.gl_dim = std::max(rec.gl_dim, br.gl_dim);
        rec.blocks.push_back(std::move(br));
    }
    return rec;
}

ClassificationRecord classify(const TwoTermCategory& cat, const SiltingObject& t) {
    ClassificationRecord rec = classify_algebra(endomorphism_table(cat, t));
    rec.object = t;
    return rec;
}

std::vector<IsoClass> dedupe(const std::vector<ClassificationRecord>& records) {
    std::vector<IsoClass> classes;
    std::map<Fingerprint, std::size_t> where;
    for (std::size_t r = 0; r < records.size(); ++r) {
        auto [it, fresh] = where.emplace(records[r].fingerprint, classes.size());
        if (fresh) classes.push_back({records[r].fingerprint, r, {}, records[r].label()});
        classes[it->second].members.push_back(r);
    }
    return classes;
}

std::map<std::string, std::size_t> family_counts(const std::vector<IsoClass>& classes) {
    std::map<std::string, std::size_t> out;
    for (const auto& c : classes) ++out[c.label];
    return out;
}

std::vector<ClassificationRecord> classify_all(const TwoTermCategory& cat, const std::vector<SiltingObject>& objects,
                                               unsigned jobs) {
    std::vector<ClassificationRecord> out(objects.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(objects.empty() ? 1 : objects.size())));
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned t) {
        try {
            for (std::size_t i = t; i < objects.size(); i += jobs) out[i] = classify(cat, objects[i]);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace silted
