#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "silted/linalg.hpp"

namespace silted {

using linalg::RatMatrix;
using linalg::Rational;
using linalg::Vec;

/// Arrow endpoints are vertex *indices* into Quiver::labels().
struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    bool operator==(const Arrow&) const = default;
};

/// Finite acyclic quiver with integer vertex labels. Vertex order is the
/// order given at construction and is what every index in the library refers
/// to.
class Quiver {
public:
    Quiver() = default;
    /// Throws ParseError on duplicate labels or ids, dangling endpoints, or an
    /// oriented cycle (loops included).
    Quiver(std::vector<int> labels, std::vector<Arrow> arrows);

    /// Convenience: arrows given by endpoint labels, ids "a1", "a2", ...
    static Quiver from_edges(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(std::size_t v) const { return labels_.at(v); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<std::size_t> find(int label) const;
    std::size_t index_of(int label) const;

    /// Vertices in an order where every arrow points forward.
    const std::vector<std::size_t>& topological_order() const { return topo_; }

    /// Connected components of the underlying graph, each sorted by index.
    std::vector<std::vector<std::size_t>> components() const;

    std::string to_string() const;

    bool operator==(const Quiver& other) const {
        return labels_ == other.labels_ && arrows_ == other.arrows_;
    }

private:
    std::vector<int> labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
};

/// Parses the line format (`vertices 1 2 3`, `arrow a:1->2`, `#` comments,
/// `;` as an alternative statement separator, `arrows` taking several
/// arrows) or the JSON form {"vertices": [...], "arrows": [{id, source,
/// target}]}. Throws ParseError.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);
std::string quiver_to_text(const Quiver& q);

Quiver opposite(const Quiver& q);

/// Full subquiver on the given vertex indices, keeping labels and arrow ids.
Quiver full_subquiver(const Quiver& q, const std::vector<std::size_t>& keep);

struct DynkinComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 0;
    auto operator<=>(const DynkinComponent&) const = default;
    std::string to_string() const;
};

struct DynkinType {
    std::vector<DynkinComponent> components;

    /// Components ordered by decreasing rank, then E before D before A.
    DynkinType canonical() const;
    /// e.g. "D4⊔A1"; empty string for the empty quiver.
    std::string to_string() const;
    int rank() const;
    bool operator==(const DynkinType& o) const { return canonical().components == o.canonical().components; }
};

/// Throws NotDynkin if some component is not an ADE diagram.
DynkinType dynkin_type(const Quiver& q);

/// Vertex-indexed tuple of non-negative integers.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> v) : v_(std::move(v)) {}
    static DimVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return v_.size(); }
    int operator[](std::size_t i) const { return v_[i]; }
    int& operator[](std::size_t i) { return v_[i]; }
    const std::vector<int>& values() const { return v_; }
    int total() const;
    bool is_zero() const { return total() == 0; }

    /// Digits run together, "110"; entries above 9 are comma separated.
    std::string to_string() const;

    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<int> v_;
};

/// <d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// C(i,j) = number of paths from i to j = dim e_i KQ e_j.
RatMatrix cartan_matrix(const Quiver& q);

/// Row-vector convention: dim(tau M) = dim(M) * Phi for non-projective
/// indecomposable M, with Phi = -C^{-1} C^T and C = cartan_matrix(q). This is
/// the transpose-conjugate of the column form -C^{-T} C, so the
/// characteristic polynomials agree.
RatMatrix coxeter_matrix(const Quiver& q);

/// Source, target (vertex indices) and arrow indices, read left to right.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

/// Rational combination of the paths from `source` to `target`, stored as
/// coordinates over PathAlgebra::piece(source, target).
struct PathVector {
    std::size_t source = 0;
    std::size_t target = 0;
    Vec coeffs;
    bool is_zero() const { return linalg::is_zero(coeffs); }
    bool operator==(const PathVector&) const = default;
};

/// Basis of KQ by paths. A path p from i to j satisfies p = e_i p e_j and the
/// product p*q is concatenation (p first) when target(p) = source(q).
class PathAlgebra {
public:
    explicit PathAlgebra(Quiver q);

    const Quiver& quiver() const { return q_; }
    std::size_t dim() const { return paths_.size(); }
    const std::vector<Path>& basis() const { return paths_; }
    const Path& path(std::size_t p) const { return paths_[p]; }

    /// Basis indices of the paths i ~> j, in basis order.
    const std::vector<std::size_t>& piece(std::size_t i, std::size_t j) const { return piece_[i][j]; }
    std::size_t piece_dim(std::size_t i, std::size_t j) const { return piece_[i][j].size(); }
    /// Position of basis path p inside its piece.
    std::size_t position(std::size_t p) const { return position_[p]; }

    std::size_t lazy(std::size_t i) const { return lazy_[i]; }
    std::optional<std::size_t> concat(std::size_t p, std::size_t q) const;
    std::optional<std::size_t> find(const std::vector<std::size_t>& arrows) const;

    PathVector zero(std::size_t i, std::size_t j) const;
    PathVector unit_vector(std::size_t p, const Rational& c = 1) const;
    PathVector multiply(const PathVector& x, const PathVector& y) const;

    /// "e1" for lazy paths, otherwise arrow ids joined with '*'.
    std::string path_name(std::size_t p) const;
    std::string to_string(const PathVector& v) const;

private:
    Quiver q_;
    std::vector<Path> paths_;
    std::vector<std::vector<std::vector<std::size_t>>> piece_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> lazy_;
    std::map<std::vector<std::size_t>, std::size_t> by_arrows_;
};

/// All paths, lazy ones included, ordered by source, then length, then the
/// arrow-id sequence.
std::vector<Path> path_basis(const Quiver& q);

}  // namespace silted
