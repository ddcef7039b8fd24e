// Representations of a Dynkin quiver, viewed as right KQ-modules.
//
// A right module M has M_i = M e_i, and an arrow a: i -> j acts M_i -> M_j by
// m |-> m a. Matrices act on row vectors, so the matrix of a is
// dim M_i x dim M_j. With this convention P(i) = e_i KQ has P(i)_j = #paths
// i ~> j, and I(i) = D(KQ e_i) has I(i)_j = #paths j ~> i.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "silted/quiver.hpp"

namespace silted {

struct ModuleRep {
    std::vector<int> dims;
    std::vector<RatMatrix> maps;  // one per arrow, dims[source] x dims[target]

    DimVector dim_vector() const { return DimVector(dims); }
    std::size_t total_dim() const;
};

/// A module morphism f: M -> N, one matrix dims_M[i] x dims_N[i] per vertex,
/// acting on row vectors. Intertwining: M_a f_t = f_s N_a.
using Morphism = std::vector<RatMatrix>;

/// Tits form sum d_i^2 - sum_{a: i->j} d_i d_j.
long tits_form(const Quiver& q, const DimVector& d);
bool is_positive_root(const Quiver& q, const DimVector& d);

/// Dimension vectors of the indecomposable modules (the positive roots),
/// sorted lexicographically. Throws NotDynkin.
std::vector<DimVector> indecomposables(const Quiver& q);

DimVector projective_dim(const Quiver& q, std::size_t i);
DimVector injective_dim(const Quiver& q, std::size_t i);
DimVector simple_dim(const Quiver& q, std::size_t i);
std::optional<std::size_t> projective_vertex(const Quiver& q, const DimVector& d);
std::optional<std::size_t> injective_vertex(const Quiver& q, const DimVector& d);

ModuleRep simple_rep(const Quiver& q, std::size_t i);
ModuleRep projective_rep(const Quiver& q, std::size_t i);
ModuleRep injective_rep(const Quiver& q, std::size_t i);
ModuleRep zero_rep(const Quiver& q);
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);

/// Deterministic indecomposable with dimension vector d. The first candidate
/// puts every arrow in echelon form [I 0]; if that decomposes, candidates
/// with small integer entries are drawn from a fixed-seed generator until
/// End(M) is one-dimensional. Throws std::invalid_argument if d is not a
/// positive root.
ModuleRep build_representation(const Quiver& q, const DimVector& d);

bool is_representation(const Quiver& q, const ModuleRep& m);

std::vector<Morphism> hom_basis(const Quiver& q, const ModuleRep& m, const ModuleRep& n);
std::size_t hom_dim(const Quiver& q, const ModuleRep& m, const ModuleRep& n);

/// From the standard resolution 0 -> (+)_a M_s (x) P(t) -> (+)_i M_i (x) P(i)
/// -> M -> 0: Ext^1(M,N) is the cokernel of
/// (+)_i Hom(M_i,N_i) -> (+)_a Hom(M_s,N_t), (f) |-> M_a f_t - f_s N_a.
std::size_t ext1_dim(const Quiver& q, const ModuleRep& m, const ModuleRep& n);

/// g o f, i.e. f first.
Morphism compose(const Morphism& f, const Morphism& g);
Vec flatten(const Morphism& f);

/// tau on dimension vectors through the Coxeter matrix, guarded by the
/// projective (resp. injective) check. Cross-checked against the Nakayama
/// construction in tau_nakayama.
std::optional<DimVector> tau(const Quiver& q, const DimVector& d);
std::optional<DimVector> tau_inverse(const Quiver& q, const DimVector& d);

/// dim tau M from the minimal presentation: sum_i (e_i - t_i) dim I(i) with
/// t_i = dim Hom(M,S_i) and e_i = dim Ext^1(M,S_i).
std::optional<DimVector> tau_nakayama(const Quiver& q, const DimVector& d);
/// Dual: sum_i (e_i - s_i) dim P(i) with s_i = dim Hom(S_i,M),
/// e_i = dim Ext^1(S_i,M).
std::optional<DimVector> tau_inverse_nakayama(const Quiver& q, const DimVector& d);

/// Object of K^[-1,0](proj A) up to isomorphism, for Dynkin Q: an
/// indecomposable module or a shifted indecomposable projective. Modules sort
/// before shifted projectives; modules by dimension vector, shifted ones by
/// vertex index.
struct IndecomposableId {
    enum class Kind { Module, Shifted };
    Kind kind = Kind::Module;
    DimVector dim;            // module dimension vector, or dim P(vertex)
    std::size_t vertex = 0;   // only meaningful for Shifted

    static IndecomposableId module(DimVector d) { return {Kind::Module, std::move(d), 0}; }
    static IndecomposableId shifted(const Quiver& q, std::size_t v) { return {Kind::Shifted, projective_dim(q, v), v}; }

    bool is_module() const { return kind == Kind::Module; }
    bool is_shifted() const { return kind == Kind::Shifted; }
    /// "110" for a module, "01[1]" for P(i)[1].
    std::string to_string() const;

    auto operator<=>(const IndecomposableId& o) const {
        if (kind != o.kind) return kind == Kind::Module ? std::strong_ordering::less : std::strong_ordering::greater;
        if (kind == Kind::Module) return dim <=> o.dim;
        return vertex <=> o.vertex;
    }
    bool operator==(const IndecomposableId& o) const { return (*this <=> o) == 0; }
};

struct ArQuiver {
    std::vector<IndecomposableId> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;     // irreducible maps
    std::vector<std::pair<std::size_t, std::size_t>> tau_pairs;  // (X, tau X)
    std::vector<int> slice;  // horizontal position, 0 = leftmost
    std::vector<int> row;    // tau-orbit, indexed by the projective it contains

    std::optional<std::size_t> find(const IndecomposableId& id) const;
    std::optional<std::size_t> tau_of(std::size_t v) const;
    std::vector<std::size_t> predecessors(std::size_t v) const;
    std::vector<std::size_t> successors(std::size_t v) const;
};

/// AR quiver of mod A. Irreducible maps are read off Hom radicals:
/// dim Irr(M,N) = dim rad(M,N) - dim rad^2(M,N).
ArQuiver ar_quiver_mod(const Quiver& q);

/// AR quiver of K^[-1,0](proj A): mod A plus P(i)[1] for every vertex, with
/// tau(P(i)[1]) = I(i), an arrow N -> P(i)[1] for each arrow I(i) -> N, and
/// P(j)[1] -> P(i)[1] for each arrow i -> j of Q.
ArQuiver ar_quiver_two_term(const Quiver& q);

/// True if every mesh is complete: arrows E -> X match arrows tau X -> E.
bool meshes_complete(const ArQuiver& ar);

}  // namespace silted
