#include "silted/fixtures.hpp"

#include <stdexcept>

namespace silted {

namespace {

Quiver chain(int n) {
    std::vector<int> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Quiver::from_edges(labels, edges);
}

std::vector<Fixture> build() {
    std::vector<Fixture> out;
    out.push_back({"A1", chain(1), 2, 1, 1, 0, {{"A1", 1}}});
    out.push_back({"A2", chain(2), 5, 2, 2, 0, {{"A2", 1}, {"A1⊔A1", 1}}});
    out.push_back({"A3", chain(3), 14, 5, 5, 0, {{"A3", 4}, {"A2⊔A1", 1}}});
    out.push_back({"A3-sink", Quiver::from_edges({1, 2, 3}, {{1, 3}, {2, 3}}), 14, 5, 6, 0, {{"A3", 4}, {"A2⊔A1", 1}, {"A1⊔A1⊔A1", 1}}});
    out.push_back({"A4", chain(4), 42, 14, 15, 0, {{"A4", 10}, {"A3⊔A1", 4}, {"A2⊔A2", 1}}});
    out.push_back({"A4-zigzag", Quiver::from_edges({1, 2, 3, 4}, {{1, 2}, {3, 2}, {3, 4}}), 42, 14, 17, 0,
                   {{"A4", 10}, {"A3⊔A1", 4}, {"A2⊔A2", 1}, {"A2⊔A1⊔A1", 1}, {"A1⊔A1⊔A1⊔A1", 1}}});
    out.push_back({"A4-sink", Quiver::from_edges({1, 2, 3, 4}, {{1, 2}, {2, 3}, {4, 3}}), 42, 14, 16, 0, {{"A4", 10}, {"A3⊔A1", 4}, {"A2⊔A2", 1}, {"A2⊔A1⊔A1", 1}}});
    out.push_back({"A4-source", Quiver::from_edges({1, 2, 3, 4}, {{2, 1}, {3, 2}, {3, 4}}), 42, 14, 16, 0, {{"A4", 10}, {"A3⊔A1", 4}, {"A2⊔A2", 1}, {"A2⊔A1⊔A1", 1}}});
    out.push_back({"D4", Quiver::from_edges({1, 2, 3, 4}, {{1, 3}, {2, 3}, {3, 4}}), 50, 20, 13, 1,
                   {{"D4", 8}, {"A3⊔A1", 3}, {"A2⊔A1⊔A1", 1}, {"strictly shod", 1}}});
    out.push_back({"D4-sink", Quiver::from_edges({1, 2, 3, 4}, {{1, 3}, {2, 3}, {4, 3}}), 50, 20, 11, 0,
                   {{"D4", 8}, {"A3⊔A1", 1}, {"A2⊔A1⊔A1", 1}, {"A1⊔A1⊔A1⊔A1", 1}}});
    out.push_back(
        {"D5", Quiver::from_edges({1, 2, 3, 4, 5}, {{1, 3}, {2, 3}, {3, 4}, {4, 5}}), 182, 77, 62, 4,
         // A D4-shaped quiver with one zero relation through the centre is a
         // gentle tree algebra, so it counts under A4⊔A1 here.
         {{"D5", 40}, {"D4⊔A1", 7}, {"A4⊔A1", 4}, {"A3⊔A2", 3}, {"A3⊔A1⊔A1", 4}, {"strictly shod", 4}}});
    return out;
}

std::vector<ShodReference> build_shod() {
    return {
        {"s1", chain(4), {{1, 2, 3}, {2, 3, 4}}},
        {"s2", chain(5), {{1, 2, 3, 4}, {3, 4, 5}}},
        {"s3", Quiver::from_edges({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {5, 4}}), {{1, 2, 3}, {2, 3, 4}}},
        {"s4", chain(5), {{1, 2, 3}, {2, 3, 4}}},
        {"s5", Quiver::from_edges({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {2, 5}}),
         {{1, 2, 3}, {1, 2, 5}, {2, 3, 4}}},
    };
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("unknown fixture " + name);
}

const std::vector<ShodReference>& strictly_shod_references() {
    static const std::vector<ShodReference> all = build_shod();
    return all;
}

}  // namespace silted
