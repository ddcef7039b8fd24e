// Basic finite-dimensional algebras given by structure constants, and their
// presentation as bound quiver algebras.
//
// B = (+)_{a,b} e_a B e_b. For B = End(T) with T = T_1 + ... + T_n,
// e_a B e_b = Hom(T_b, T_a) and x*y = x o y. Under this convention
// End(A_A) = A with the quiver of A, paths written left to right.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "silted/silting.hpp"

namespace silted {

/// Each diagonal piece e_a B e_a must be K e_a; products with idempotents are
/// filled in at construction, the rest is set with set_product.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    explicit FiniteAlgebra(std::vector<std::vector<std::size_t>> piece_dims);

    std::size_t vertices() const { return dims_.size(); }
    std::size_t piece_dim(std::size_t a, std::size_t b) const { return dims_[a][b]; }
    std::size_t dim() const;

    /// Product of basis element i of piece(a,b) and basis element j of
    /// piece(b,c), in coordinates of piece(a,c).
    const Vec& product(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j) const;
    void set_product(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, Vec v);
    Vec multiply(std::size_t a, std::size_t b, std::size_t c, const Vec& x, const Vec& y) const;

    /// e B e for e the sum of the given idempotents, in the given order.
    FiniteAlgebra restrict(const std::vector<std::size_t>& vs) const;
    FiniteAlgebra opposite() const;

    bool is_associative() const;
    RatMatrix cartan() const;

private:
    std::vector<std::vector<std::size_t>> dims_;
    // table_[a][b][c][i * dims_[b][c] + j]
    std::vector<std::vector<std::vector<std::vector<Vec>>>> table_;
};

/// Gabriel quiver, arrow elements and minimal relations of a FiniteAlgebra.
struct BoundQuiverAlgebra {
    FiniteAlgebra algebra;
    PathAlgebra paths{Quiver{}};         // path algebra of the Gabriel quiver
    std::vector<Vec> arrow_elements;      // arrow k as an element of its piece
    std::vector<PathVector> relations;    // minimal generators of the ideal
    /// ideal_dims[a][b] = dim of the relation ideal in e_a KQ' e_b.
    std::vector<std::vector<std::size_t>> ideal_dims;

    const Quiver& quiver() const { return paths.quiver(); }
    std::size_t dimension() const { return algebra.dim(); }
    /// Minimal relations from a to b.
    std::size_t relation_count(std::size_t a, std::size_t b) const;
};

/// Presents B as KQ'/I. Vertices are labelled by `labels` (1..n when empty),
/// arrows "a1", "a2", ... in order of (source, target). Throws
/// AssertionFailure if the radical is not nilpotent or if the computed
/// relations do not reproduce B.
BoundQuiverAlgebra present(const FiniteAlgebra& b, std::vector<int> labels = {});

/// Structure constants of End(T), summands in the order of t.summands.
FiniteAlgebra endomorphism_table(const TwoTermCategory& cat, const SiltingObject& t);
BoundQuiverAlgebra endomorphism_algebra(const TwoTermCategory& cat, const SiltingObject& t);

Quiver gabriel_quiver(const BoundQuiverAlgebra& b);

/// Connected components of the Gabriel quiver, each presented on its own with
/// the original vertex labels.
std::vector<BoundQuiverAlgebra> blocks(const BoundQuiverAlgebra& b);
std::vector<std::vector<std::size_t>> block_vertices(const BoundQuiverAlgebra& b);

/// KQ modulo the ideal generated by the given paths (arrow index lists).
FiniteAlgebra monomial_algebra(const Quiver& q, const std::vector<std::vector<std::size_t>>& zero_relations);
/// Same, relations written as vertex-label walks, e.g. {1, 2, 3}.
FiniteAlgebra monomial_algebra_by_walks(const Quiver& q, const std::vector<std::vector<int>>& walks);

struct CartanData {
    RatMatrix cartan;
    /// Characteristic polynomial of -C^{-T} C, ascending coefficients.
    std::vector<long> coxeter_polynomial;
};

/// Throws AssertionFailure if the Cartan matrix is singular.
CartanData cartan_data(const FiniteAlgebra& b);

std::string polynomial_to_string(const std::vector<long>& coeffs);

}  // namespace silted
