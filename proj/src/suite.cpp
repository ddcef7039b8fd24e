#include "silted/suite.hpp"

#include "silted/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace silted {

std::size_t QuiverRun::strictly_shod_classes() const {
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [&](const IsoClass& c) {
        return records[c.representative].strictly_shod();
    }));
}

QuiverRun run_quiver(const Quiver& q, unsigned jobs) {
    QuiverRun run;
    run.quiver = q;
    run.cat = std::make_unique<TwoTermCategory>(q, jobs);
    run.tilting = tilting_modules_alg1(q);
    run.silting = silting_alg2(q);
    run.records = classify_all(*run.cat, run.silting, jobs);
    run.classes = dedupe(run.records);
    return run;
}

bool SuiteReport::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

namespace {

struct Checker {
    CriterionResult& result;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        result.pass = false;
        if (result.failures.size() < 20) result.failures.push_back(what);
    }
};

std::string ratio(std::size_t got, std::size_t want) { return std::to_string(got) + "/" + std::to_string(want); }

template <typename T>
std::string str(const T& v) {
    return std::to_string(v);
}

void enumeration_counts(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        c.expect(runs[i].silting.size() == fx[i]->silting,
                 fx[i]->name + ": silting " + ratio(runs[i].silting.size(), fx[i]->silting));
        c.expect(runs[i].tilting.size() == fx[i]->tilting,
                 fx[i]->name + ": tilting " + ratio(runs[i].tilting.size(), fx[i]->tilting));
        const auto tilting_objects = std::count_if(runs[i].silting.begin(), runs[i].silting.end(),
                                                   [](const SiltingObject& t) { return t.is_tilting(); });
        c.expect(static_cast<std::size_t>(tilting_objects) == fx[i]->tilting,
                 fx[i]->name + ": silting objects without shifted summands " +
                     ratio(static_cast<std::size_t>(tilting_objects), fx[i]->tilting));
    }
}

void classification(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const auto& run = runs[i];
        c.expect(run.classes.size() == fx[i]->classes,
                 fx[i]->name + ": classes " + ratio(run.classes.size(), fx[i]->classes));
        c.expect(run.strictly_shod_classes() == fx[i]->strictly_shod,
                 fx[i]->name + ": strictly shod classes " + ratio(run.strictly_shod_classes(), fx[i]->strictly_shod));
        const auto got = family_counts(run.classes);
        std::map<std::string, std::size_t> want(fx[i]->families.begin(), fx[i]->families.end());
        c.expect(got == want, fx[i]->name + ": family split differs");
    }
}

void strictly_shod_structure(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    const auto& refs = strictly_shod_references();
    std::vector<Fingerprint> ref_fp, ref_op;
    for (const auto& s : refs) {
        const FiniteAlgebra a = monomial_algebra_by_walks(s.quiver, s.zero_walks);
        const auto rec = classify_algebra(a);
        c.expect(rec.gl_dim == 3, s.name + ": gl.dim " + str(rec.gl_dim));
        ref_fp.push_back(rec.fingerprint);
        ref_op.push_back(classify_algebra(a.opposite()).fingerprint);
    }
    // reference index -> fixtures where it occurs
    std::map<std::size_t, std::set<std::string>> seen;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        for (const auto& cls : runs[i].classes) {
            const auto& r = runs[i].records[cls.representative];
            c.expect(r.gl_dim <= 3, fx[i]->name + ": gl.dim " + str(r.gl_dim));
            for (const auto& blk : r.blocks) {
                if (blk.gl_dim != 3) continue;
                const Fingerprint fp = fingerprint(blk.algebra);
                bool matched = false;
                for (std::size_t k = 0; k < refs.size(); ++k)
                    if (fp == ref_fp[k] || fp == ref_op[k]) {
                        seen[k].insert(fx[i]->name);
                        matched = true;
                    }
                c.expect(matched, fx[i]->name + ": gl.dim 3 block matches no reference: " + sketch(blk.algebra));
                c.expect(blk.strictly_shod, fx[i]->name + ": gl.dim 3 block not marked strictly shod");
            }
        }
    }
    for (std::size_t k = 0; k < refs.size(); ++k) {
        const std::string where = k == 0 ? "D4" : "D5";
        c.expect(seen[k].count(where) == 1, refs[k].name + " not found over " + where);
    }
}

void oracles(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const auto& run = runs[i];
        c.expect(tilting_modules_bruteforce(run.quiver) == run.tilting, fx[i]->name + ": tilting oracle mismatch");
        c.expect(silting_bruteforce(*run.cat) == run.silting, fx[i]->name + ": silting oracle mismatch");
    }
}

void homological(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const auto& run = runs[i];
        const Quiver& q = run.quiver;
        const auto& cat = *run.cat;
        const std::string& name = fx[i]->name;
        const std::size_t m = cat.module_count();
        for (std::size_t x = 0; x < m; ++x) {
            const DimVector& d = cat.objects()[x].dim;
            c.expect(tau(q, d) == tau_nakayama(q, d), name + ": tau " + d.to_string());
            c.expect(tau_inverse(q, d) == tau_inverse_nakayama(q, d), name + ": tau^-1 " + d.to_string());
            const auto t = tau(q, d);
            for (std::size_t y = 0; y < m; ++y) {
                const DimVector& e = cat.objects()[y].dim;
                const long hom = static_cast<long>(hom_dim(q, cat.rep(x), cat.rep(y)));
                const long ext = static_cast<long>(ext1_dim(q, cat.rep(x), cat.rep(y)));
                c.expect(hom - ext == euler_form(q, d, e), name + ": Euler identity " + d.to_string() + "," + e.to_string());
                c.expect(static_cast<long>(cat.hom(x, y).dim()) == hom,
                         name + ": homotopy Hom differs from module Hom " + d.to_string() + "," + e.to_string());
                c.expect(static_cast<long>(cat.hom1(x, y)) == ext,
                         name + ": Hom(X,Y[1]) differs from Ext " + d.to_string() + "," + e.to_string());
                if (t) {
                    const std::size_t tx = cat.index_of(IndecomposableId::module(*t));
                    c.expect(ext == static_cast<long>(hom_dim(q, cat.rep(y), cat.rep(tx))),
                             name + ": AR formula " + d.to_string() + "," + e.to_string());
                }
            }
        }
        for (const auto& r : run.records) {
            std::vector<std::size_t> idx;
            for (const auto& x : r.object.summands) idx.push_back(cat.index_of(x));
            std::size_t total = 0;
            for (auto x : idx)
                for (auto y : idx) total += cat.hom(x, y).dim();
            c.expect(r.algebra.dimension() == total, name + ": dim End " + r.object.to_string());
            const auto ext1 = ext_matrix(r.resolutions, 1);
            const auto ext2 = ext_matrix(r.resolutions, 2);
            const Quiver& g = r.algebra.quiver();
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b) {
                    const auto arrows = static_cast<std::size_t>(std::count_if(
                        g.arrows().begin(), g.arrows().end(),
                        [&](const Arrow& ar) { return ar.source == a && ar.target == b; }));
                    c.expect(arrows == ext1[a][b], name + ": arrows vs Ext1 for " + r.object.to_string());
                    c.expect(r.algebra.relation_count(a, b) == ext2[a][b],
                             name + ": relations vs Ext2 for " + r.object.to_string());
                }
        }
    }
}

void duality(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs,
             const std::vector<QuiverRun>& opposites, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        c.expect(runs[i].silting.size() == opposites[i].silting.size(), fx[i]->name + ": silting count vs opposite");
        c.expect(runs[i].tilting.size() == opposites[i].tilting.size(), fx[i]->name + ": tilting count vs opposite");
        c.expect(runs[i].classes.size() == opposites[i].classes.size(), fx[i]->name + ": class count vs opposite");
        c.expect(family_counts(runs[i].classes) == family_counts(opposites[i].classes),
                 fx[i]->name + ": family split vs opposite");
    }
}

void type_q_objects(const std::vector<const Fixture*>& fx, const std::vector<QuiverRun>& runs, Checker c) {
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Quiver& q = runs[i].quiver;
        const std::string type = dynkin_type(q).canonical().to_string();
        for (const auto& r : runs[i].records) {
            const auto modules = r.object.modules();
            const bool no_projective = std::none_of(modules.begin(), modules.end(), [&](const DimVector& d) {
                return projective_vertex(q, d).has_value();
            });
            if (!r.object.is_tilting() && !no_projective) continue;
            c.expect(!r.strictly_shod() && r.label() == type,
                     fx[i]->name + ": " + r.object.to_string() + " is " + r.label());
        }
    }
}

}  // namespace

SuiteReport run_suite(unsigned jobs) {
    std::vector<const Fixture*> fx;
    std::vector<QuiverRun> runs, opposites;
    for (const auto& f : fixtures()) {
        fx.push_back(&f);
        runs.push_back(run_quiver(f.quiver, jobs));
        opposites.push_back(run_quiver(opposite(f.quiver), jobs));
    }

    SuiteReport report;
    const std::vector<std::string> titles = {
        "enumeration counts",     "silted algebra classification", "strictly shod structure",
        "oracle equivalence",     "homological invariants",        "duality under opposition",
        "type Q when P = 0 or M has no projective summand"};
    for (std::size_t k = 0; k < titles.size(); ++k) report.criteria.push_back({static_cast<int>(k + 1), titles[k], true, {}});
    auto& cr = report.criteria;
    enumeration_counts(fx, runs, {cr[0]});
    classification(fx, runs, {cr[1]});
    strictly_shod_structure(fx, runs, {cr[2]});
    oracles(fx, runs, {cr[3]});
    homological(fx, runs, {cr[4]});
    duality(fx, runs, opposites, {cr[5]});
    type_q_objects(fx, runs, {cr[6]});

    std::ostringstream table;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %10s %10s %10s %8s\n", "quiver", "silting", "tilting", "classes", "shod");
    table << line;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        std::snprintf(line, sizeof line, "%-10s %10s %10s %10s %8s\n", fx[i]->name.c_str(),
                      ratio(runs[i].silting.size(), fx[i]->silting).c_str(),
                      ratio(runs[i].tilting.size(), fx[i]->tilting).c_str(),
                      ratio(runs[i].classes.size(), fx[i]->classes).c_str(),
                      ratio(runs[i].strictly_shod_classes(), fx[i]->strictly_shod).c_str());
        table << line;
    }
    report.table = table.str();
    return report;
}

}  // namespace silted
