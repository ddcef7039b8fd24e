// Bundled quivers with their reference counts, and the five strictly shod
// algebras as monomial bound quivers.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "silted/quiver.hpp"

namespace silted {

struct Fixture {
    std::string name;
    Quiver quiver;
    std::size_t silting = 0;
    std::size_t tilting = 0;
    std::size_t classes = 0;
    std::size_t strictly_shod = 0;
    /// Expected label -> class count; empty when only the total is pinned.
    std::vector<std::pair<std::string, std::size_t>> families;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

struct ShodReference {
    std::string name;
    Quiver quiver;
    std::vector<std::vector<int>> zero_walks;
};

/// s1 arises over D4 (first orientation), s2..s5 over D5.
const std::vector<ShodReference>& strictly_shod_references();

}  // namespace silted
