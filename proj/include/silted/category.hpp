// All indecomposable objects of K^[-1,0](proj KQ) for a Dynkin quiver,
// with their Hom spaces precomputed. Built once, then read-only, so one
// instance can be shared by worker threads.

#pragma once

#include <cstddef>
#include <vector>

#include "silted/complexes.hpp"

namespace silted {

class TwoTermCategory {
public:
    /// jobs > 1 spreads the Hom computations over that many threads; the
    /// result does not depend on it.
    explicit TwoTermCategory(Quiver q, unsigned jobs = 1);
    // Hom bases point into alg_, so the object stays put.
    TwoTermCategory(const TwoTermCategory&) = delete;
    TwoTermCategory& operator=(const TwoTermCategory&) = delete;

    const Quiver& quiver() const { return q_; }
    const PathAlgebra& algebra() const { return alg_; }

    /// Modules (sorted by dimension vector) then P(i)[1] in vertex order;
    /// the same order as ar_quiver_two_term(q).vertices.
    const std::vector<IndecomposableId>& objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }
    std::size_t module_count() const { return reps_.size(); }
    std::size_t index_of(const IndecomposableId& id) const;

    const ModuleRep& rep(std::size_t x) const { return reps_.at(x); }
    const TwoTermComplex& complex(std::size_t x) const { return complexes_[x]; }

    /// Hom_K(X, Y) as homotopy classes.
    const HomClassBasis& hom(std::size_t x, std::size_t y) const { return hom0_[x][y]; }
    /// dim Hom_K(X, Y[1]).
    std::size_t hom1(std::size_t x, std::size_t y) const { return hom1_[x][y]; }

private:
    Quiver q_;
    PathAlgebra alg_;
    std::vector<IndecomposableId> objects_;
    std::vector<ModuleRep> reps_;
    std::vector<TwoTermComplex> complexes_;
    std::vector<std::vector<HomClassBasis>> hom0_;
    std::vector<std::vector<std::size_t>> hom1_;
};

}  // namespace silted
