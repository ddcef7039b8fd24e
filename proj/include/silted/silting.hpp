#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "silted/category.hpp"

namespace silted {

/// Basic tilting module: its indecomposable summands, sorted.
struct TiltingModule {
    std::vector<DimVector> summands;
    auto operator<=>(const TiltingModule&) const = default;
    std::string to_string() const;
};

/// Basic 2-term silting complex M + P[1], summands sorted (modules first).
struct SiltingObject {
    std::vector<IndecomposableId> summands;

    /// Vertices i with P(i)[1] a summand.
    std::vector<std::size_t> shifted_vertices() const;
    std::vector<DimVector> modules() const;
    bool is_tilting() const { return shifted_vertices().empty(); }
    std::string to_string() const;

    auto operator<=>(const SiltingObject& o) const { return summands <=> o.summands; }
    bool operator==(const SiltingObject& o) const { return summands == o.summands; }
};

/// Full subquiver on Q_0 \ I: the quiver of A/<e> with e = sum_{i in I} e_i.
Quiver restrict(const Quiver& q, const std::vector<std::size_t>& I);

/// How the filter in step (2) of the recursive construction reads
/// "injective": as a module over A (the default) or over the quotient A(I).
enum class InjectiveReading { OverA, OverQuotient };

/// Tilting modules by the recursion over idempotent quotients: for each
/// non-empty I, M = P(I) + tau^{-1} N for every tilting A(I)-module N
/// without injective summands, followed by tau^{-p} M for p = 1, 2, ...
/// until a stage has an injective summand (that stage included).
std::vector<TiltingModule> tilting_modules_alg1(const Quiver& q, InjectiveReading reading = InjectiveReading::OverA);

/// All n-subsets of indecomposables with pairwise vanishing Ext^1.
std::vector<TiltingModule> tilting_modules_bruteforce(const Quiver& q);

/// T = M + P(I)[1] for every subset I and every tilting module M over A(I).
std::vector<SiltingObject> silting_alg2(const Quiver& q);

/// All n-subsets of objects of K^[-1,0](proj A) with Hom(X, Y[1]) = 0 for all
/// ordered pairs, X = Y included.
std::vector<SiltingObject> silting_bruteforce(const TwoTermCategory& cat);

bool is_presilting(const TwoTermCategory& cat, const std::vector<IndecomposableId>& t);

SiltingObject as_silting(const TiltingModule& t);

}  // namespace silted
