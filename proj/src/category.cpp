#include "silted/category.hpp"

#include <algorithm>
#include <thread>

#include "silted/error.hpp"

namespace silted {

TwoTermCategory::TwoTermCategory(Quiver q, unsigned jobs) : q_(std::move(q)), alg_(q_) {
    for (const auto& d : indecomposables(q_)) {
        objects_.push_back(IndecomposableId::module(d));
        reps_.push_back(build_representation(q_, d));
        complexes_.push_back(resolve(alg_, reps_.back()));
    }
    for (std::size_t i = 0; i < q_.size(); ++i) {
        objects_.push_back(IndecomposableId::shifted(q_, i));
        complexes_.push_back(shifted_projective(alg_, i));
    }

    const std::size_t n = objects_.size();
    hom0_.assign(n, std::vector<HomClassBasis>(n));
    hom1_.assign(n, std::vector<std::size_t>(n, 0));
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t x = first; x < n; x += stride)
            for (std::size_t y = 0; y < n; ++y) {
                hom0_[x][y] = HomClassBasis(alg_, complexes_[x], complexes_[y], 0);
                hom1_[x][y] = HomClassBasis(alg_, complexes_[x], complexes_[y], 1).dim();
            }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n ? n : 1)));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& t : pool) t.join();
    }
}

std::size_t TwoTermCategory::index_of(const IndecomposableId& id) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), id);
    check(it != objects_.end() && *it == id, "object " + id.to_string() + " not in the category");
    return static_cast<std::size_t>(it - objects_.begin());
}

}  // namespace silted
