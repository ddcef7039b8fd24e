// Two-term complexes of projective KQ-modules and their morphisms up to
// homotopy.
//
// Hom(P(i), P(j)) is identified with e_j A e_i: the map sends e_i to a
// combination of paths j ~> i and acts by left multiplication. Composing
// f: P(i) -> P(j) (element p) with g: P(j) -> P(k) (element q) gives q*p.

#pragma once

#include <cstddef>
#include <vector>

#include "silted/modules.hpp"

namespace silted {

/// Map between direct sums of indecomposable projectives. Entry (r, c) is in
/// Hom(P(source[c]), P(target[r])) = e_{target[r]} A e_{source[c]}.
struct ProjMap {
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;
    std::vector<std::vector<PathVector>> entries;  // target.size() rows

    static ProjMap zero(const PathAlgebra& alg, std::vector<std::size_t> source, std::vector<std::size_t> target);
    bool is_zero() const;
};

/// g o f for f: U -> V and g: V -> W.
ProjMap compose(const PathAlgebra& alg, const ProjMap& f, const ProjMap& g);

/// Coordinates of Hom(U, V) laid out entry by entry, row-major, each entry in
/// the path basis of its piece.
class HomLayout {
public:
    HomLayout(const PathAlgebra& alg, std::vector<std::size_t> source, std::vector<std::size_t> target);
    std::size_t dim() const { return offsets_.back(); }
    Vec pack(const ProjMap& f) const;
    ProjMap unpack(const Vec& v) const;
    ProjMap basis_element(std::size_t k) const;

private:
    const PathAlgebra* alg_;
    std::vector<std::size_t> source_, target_;
    std::vector<std::size_t> offsets_;
};

/// P^{-1} -> P^0. The differential has deg_0.size() rows and
/// deg_minus1.size() columns.
struct TwoTermComplex {
    std::vector<std::size_t> deg_minus1;
    std::vector<std::size_t> deg_0;
    ProjMap differential;
};

/// Minimal projective resolution 0 -> P1 -> P0 -> M -> 0 as the complex
/// P1 -> P0. Generators are chosen greedily in vertex order, so the result is
/// a function of the representation.
TwoTermComplex resolve(const PathAlgebra& alg, const ModuleRep& m);
TwoTermComplex shifted_projective(const PathAlgebra& alg, std::size_t i);

/// H^0 of a complex as a representation (used to check resolve).
std::vector<int> homology_dims(const PathAlgebra& alg, const TwoTermComplex& x, int degree);

/// Components of a chain map X -> Y[k] in degrees -1 and 0. For k = 1 the
/// degree 0 part maps to the empty sum; for k = -1 the degree -1 part does.
struct ChainMap {
    ProjMap minus1;
    ProjMap zero;
};

/// Basis of Hom_K(X, Y[k]) as representatives of homotopy classes. Classes
/// have a canonical coordinate form: a chain map is reduced modulo the
/// null-homotopic maps (kept in reduced echelon form) and then expressed in
/// the echelon basis of the reduced representatives.
class HomClassBasis {
public:
    HomClassBasis() = default;
    HomClassBasis(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, int shift);

    int shift() const { return shift_; }
    std::size_t dim() const { return reps_.size(); }
    const std::vector<ChainMap>& maps() const { return reps_; }
    const ChainMap& map(std::size_t k) const { return reps_[k]; }

    /// Coordinates of the class of f; throws AssertionFailure if f is not a
    /// chain map.
    Vec coordinates(const ChainMap& f) const;
    Vec pack(const ChainMap& f) const;
    ChainMap unpack(const Vec& v) const;
    /// The chain map sum_k coords[k] * map(k).
    ChainMap combination(const Vec& coords) const;
    bool is_null_homotopic(const ChainMap& f) const;

private:
    int shift_ = 0;
    std::vector<HomLayout> layouts_;  // degree -1 part, degree 0 part
    linalg::EchelonBasis cycles_;
    linalg::EchelonBasis boundaries_;
    linalg::EchelonBasis classes_;
    std::vector<ChainMap> reps_;
};

HomClassBasis hom_class_basis(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, int shift);

ChainMap identity_map(const PathAlgebra& alg, const TwoTermComplex& x);

/// g o f of degree-0 chain maps. Throws std::invalid_argument if the middle
/// objects do not match.
ChainMap compose(const PathAlgebra& alg, const ChainMap& f, const ChainMap& g);

/// Composite of classes given by coordinates: f in Hom(X,Y), g in Hom(Y,Z),
/// result in coordinates of xz. Only shift 0 composes; other shifts throw
/// std::invalid_argument.
Vec compose_classes(const PathAlgebra& alg, const HomClassBasis& xy, const Vec& f, const HomClassBasis& yz,
                    const Vec& g, const HomClassBasis& xz);

bool is_chain_map(const PathAlgebra& alg, const TwoTermComplex& x, const TwoTermComplex& y, const ChainMap& f);

}  // namespace silted
