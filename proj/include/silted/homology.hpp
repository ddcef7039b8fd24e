// Minimal projective resolutions of simple right modules over a
// FiniteAlgebra, and the classification of silted algebras built on them.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "silted/algebra.hpp"

namespace silted {

struct SimpleResolution {
    std::size_t vertex = 0;
    int pd = 0;
    /// multiplicity[k][b] = dim Ext^k(S_vertex, S_b), k = 0..pd.
    std::vector<std::vector<std::size_t>> multiplicity;
};

/// Throws AssertionFailure if a resolution is longer than `cap`.
std::vector<SimpleResolution> resolve_simples(const FiniteAlgebra& b, int cap = 10);

std::vector<std::pair<std::size_t, int>> projective_dimension_of_simples(const FiniteAlgebra& b, int cap = 10);
int global_dimension(const FiniteAlgebra& b, int cap = 10);

/// dim Ext^k(S_a, S_b) as an n x n table.
std::vector<std::vector<std::size_t>> ext_matrix(const std::vector<SimpleResolution>& res, int k);

/// Isomorphism invariant: lexicographic minimum over vertex relabellings of
/// the arrow counts, the Cartan matrix, the Ext^2 and Ext^3 tables between
/// simples, and the projective dimensions of the simples.
struct Fingerprint {
    std::vector<long> data;
    auto operator<=>(const Fingerprint&) const = default;
    std::string hex() const;
};

Fingerprint fingerprint(const BoundQuiverAlgebra& b, const std::vector<SimpleResolution>& res);
Fingerprint fingerprint(const BoundQuiverAlgebra& b);

/// Dynkin type whose hereditary Coxeter polynomial equals the block's. Throws
/// AssertionFailure if there is none in the reference table.
DynkinType tilted_type(const BoundQuiverAlgebra& block);

/// Reference table: Coxeter polynomial -> type, generated from hereditary
/// Cartan matrices of A1..A8, D4..D8, E6..E8.
const std::map<std::vector<long>, DynkinComponent>& coxeter_table();

struct BlockReport {
    std::vector<std::size_t> vertices;  // indices into the whole algebra
    BoundQuiverAlgebra algebra;
    int gl_dim = 0;
    bool strictly_shod = false;
    DynkinComponent type;  // only meaningful when !strictly_shod
    std::string label() const { return strictly_shod ? "strictly shod" : type.to_string(); }
};

struct ClassificationRecord {
    SiltingObject object;
    BoundQuiverAlgebra algebra;
    std::vector<SimpleResolution> resolutions;
    Fingerprint fingerprint;
    std::vector<BlockReport> blocks;
    int gl_dim = 0;

    bool strictly_shod() const;
    /// Union of the block labels, e.g. "A3⊔A1" or "strictly shod".
    std::string label() const;
};

ClassificationRecord classify(const TwoTermCategory& cat, const SiltingObject& t);
ClassificationRecord classify_algebra(const FiniteAlgebra& b);

struct IsoClass {
    Fingerprint fingerprint;
    std::size_t representative = 0;  // index of the first record in the class
    std::vector<std::size_t> members;
    std::string label;
};

/// Groups records by fingerprint, classes in order of first appearance.
std::vector<IsoClass> dedupe(const std::vector<ClassificationRecord>& records);

/// label -> number of classes.
std::map<std::string, std::size_t> family_counts(const std::vector<IsoClass>& classes);

/// Classifies every object, fanned out over `jobs` threads; the output order
/// follows `objects`.
std::vector<ClassificationRecord> classify_all(const TwoTermCategory& cat, const std::vector<SiltingObject>& objects,
                                               unsigned jobs = 1);

}  // namespace silted
