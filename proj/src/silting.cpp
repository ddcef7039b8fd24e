#include "silted/silting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "silted/error.hpp"

namespace silted {

std::string TiltingModule::to_string() const {
    std::string s;
    for (const auto& d : summands) s += (s.empty() ? "" : "⊕") + d.to_string();
    return s.empty() ? "0" : s;
}

std::vector<std::size_t> SiltingObject::shifted_vertices() const {
    std::vector<std::size_t> out;
    for (const auto& x : summands)
        if (x.is_shifted()) out.push_back(x.vertex);
    return out;
}

std::vector<DimVector> SiltingObject::modules() const {
    std::vector<DimVector> out;
    for (const auto& x : summands)
        if (x.is_module()) out.push_back(x.dim);
    return out;
}

std::string SiltingObject::to_string() const {
    std::string s;
    for (const auto& x : summands) s += (s.empty() ? "" : "⊕") + x.to_string();
    return s.empty() ? "0" : s;
}

Quiver restrict(const Quiver& q, const std::vector<std::size_t>& I) {
    std::vector<bool> drop(q.size(), false);
    for (auto i : I) drop.at(i) = true;
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < q.size(); ++v)
        if (!drop[v]) keep.push_back(v);
    return full_subquiver(q, keep);
}

SiltingObject as_silting(const TiltingModule& t) {
    SiltingObject s;
    for (const auto& d : t.summands) s.summands.push_back(IndecomposableId::module(d));
    return s;
}

namespace {

// tau^{-1} and injectivity on the indecomposables of one quiver.
struct TauTable {
    std::map<DimVector, std::optional<DimVector>> tau_inv;
    std::set<DimVector> injective;

    explicit TauTable(const Quiver& q) {
        for (const auto& d : indecomposables(q)) tau_inv[d] = tau_inverse(q, d);
        for (std::size_t i = 0; i < q.size(); ++i) injective.insert(injective_dim(q, i));
    }
    bool any_injective(const std::vector<DimVector>& m) const {
        return std::any_of(m.begin(), m.end(), [&](const DimVector& d) { return injective.count(d) > 0; });
    }
};

std::vector<std::size_t> subset(std::size_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

// Indices in q of the vertices kept by restrict(q, I).
std::vector<std::size_t> complement(const std::vector<std::size_t>& I, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
        if (std::find(I.begin(), I.end(), v) == I.end()) out.push_back(v);
    return out;
}

DimVector extend(const DimVector& d, const std::vector<std::size_t>& embed, std::size_t n) {
    std::vector<int> v(n, 0);
    for (std::size_t k = 0; k < embed.size(); ++k) v[embed[k]] = d[k];
    return DimVector(std::move(v));
}

using Memo = std::map<std::vector<int>, std::vector<TiltingModule>>;

const std::vector<TiltingModule>& alg1(const Quiver& q, InjectiveReading reading, Memo& memo) {
    if (auto it = memo.find(q.labels()); it != memo.end()) return it->second;
    std::set<TiltingModule> found;
    if (q.empty()) {
        found.insert(TiltingModule{});
    } else {
        const std::size_t n = q.size();
        const TauTable table(q);
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            const auto I = subset(mask, n);
            const auto embed = complement(I, n);
            const Quiver sub = restrict(q, I);
            const std::vector<TiltingModule> ns = alg1(sub, reading, memo);
            std::optional<TauTable> sub_table;
            if (reading == InjectiveReading::OverQuotient) sub_table.emplace(sub);
            for (const auto& N : ns) {
                if (reading == InjectiveReading::OverQuotient && sub_table->any_injective(N.summands)) continue;
                std::vector<DimVector> ext;
                for (const auto& d : N.summands) ext.push_back(extend(d, embed, n));
                if (table.any_injective(ext)) continue;
                std::vector<DimVector> m;
                for (auto i : I) m.push_back(projective_dim(q, i));
                for (const auto& d : ext) m.push_back(*table.tau_inv.at(d));
                while (true) {
                    TiltingModule t{m};
                    std::sort(t.summands.begin(), t.summands.end());
                    found.insert(t);
                    if (table.any_injective(m)) break;
                    for (auto& d : m) d = *table.tau_inv.at(d);
                }
            }
        }
    }
    return memo[q.labels()] = std::vector<TiltingModule>(found.begin(), found.end());
}

}  // namespace

std::vector<TiltingModule> tilting_modules_alg1(const Quiver& q, InjectiveReading reading) {
    dynkin_type(q);
    Memo memo;
    return alg1(q, reading, memo);
}

namespace {

// Visits every k-subset of {0..m-1} whose elements are pairwise compatible.
template <typename Compatible, typename Emit>
void cliques(std::size_t m, std::size_t k, Compatible compatible, Emit emit) {
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == k) {
            emit(chosen);
            return;
        }
        for (std::size_t x = start; x + (k - chosen.size()) <= m; ++x) {
            bool ok = compatible(x, x);
            for (std::size_t y : chosen) ok = ok && compatible(x, y);
            if (!ok) continue;
            chosen.push_back(x);
            self(self, x + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<TiltingModule> tilting_modules_bruteforce(const Quiver& q) {
    const auto dims = indecomposables(q);
    const std::size_t m = dims.size();
    std::vector<ModuleRep> reps;
    for (const auto& d : dims) reps.push_back(build_representation(q, d));
    std::vector<std::vector<std::size_t>> ext(m, std::vector<std::size_t>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) ext[x][y] = ext1_dim(q, reps[x], reps[y]);
    std::vector<TiltingModule> out;
    cliques(m, q.size(), [&](std::size_t x, std::size_t y) { return ext[x][y] == 0 && ext[y][x] == 0; },
            [&](const std::vector<std::size_t>& s) {
                TiltingModule t;
                for (auto x : s) t.summands.push_back(dims[x]);
                out.push_back(std::move(t));
            });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SiltingObject> silting_alg2(const Quiver& q) {
    dynkin_type(q);
    const std::size_t n = q.size();
    Memo memo;
    std::set<SiltingObject> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        const auto I = subset(mask, n);
        const auto embed = complement(I, n);
        for (const auto& m : alg1(restrict(q, I), InjectiveReading::OverA, memo)) {
            SiltingObject t;
            for (const auto& d : m.summands) t.summands.push_back(IndecomposableId::module(extend(d, embed, n)));
            for (auto i : I) t.summands.push_back(IndecomposableId::shifted(q, i));
            std::sort(t.summands.begin(), t.summands.end());
            found.insert(std::move(t));
        }
    }
    return {found.begin(), found.end()};
}

std::vector<SiltingObject> silting_bruteforce(const TwoTermCategory& cat) {
    std::vector<SiltingObject> out;
    cliques(cat.size(), cat.quiver().size(),
            [&](std::size_t x, std::size_t y) { return cat.hom1(x, y) == 0 && cat.hom1(y, x) == 0; },
            [&](const std::vector<std::size_t>& s) {
                SiltingObject t;
                for (auto x : s) t.summands.push_back(cat.objects()[x]);
                out.push_back(std::move(t));
            });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_presilting(const TwoTermCategory& cat, const std::vector<IndecomposableId>& t) {
    std::vector<std::size_t> idx;
    for (const auto& x : t) idx.push_back(cat.index_of(x));
    for (auto x : idx)
        for (auto y : idx)
            if (cat.hom1(x, y) != 0) return false;
    return true;
}

}  // namespace silted
