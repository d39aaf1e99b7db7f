#include "schrome/builtins.hpp"

#include "schrome/error.hpp"

namespace schrome {

namespace {

std::vector<std::vector<int>> mt7_facets() {
    // Z_7-invariant triangulation: orbits of {1,2,4} and {1,3,4}.
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        f.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return f;
}

std::vector<std::vector<int>> t2_9_facets() {
    // 3x3 grid of squares cut by their NE diagonals, opposite sides glued;
    // vertex rows bottom to top: 1 2 3 / 4 6 7 / 5 8 9.
    const int grid[4][4] = {{1, 2, 3, 1}, {4, 6, 7, 4}, {5, 8, 9, 5}, {1, 2, 3, 1}};
    std::vector<std::vector<int>> f;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            int a = grid[y][x], b = grid[y][x + 1], c = grid[y + 1][x + 1], d = grid[y + 1][x];
            f.push_back({a, b, c});
            f.push_back({a, c, d});
        }
    return f;
}

}  // namespace

SimplicialComplex builtin(const std::string& name) {
    if (name == "K_EX" || name == "TRI_PATH")
        return SimplicialComplex::from_facets(
            std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}, {4, 5, 6}});
    if (name == "TRI_FAN")
        return SimplicialComplex::from_facets(
            std::vector<std::vector<int>>{{1, 2, 4}, {1, 3, 4}, {4, 5, 6}});
    if (name == "MB")
        return SimplicialComplex::from_facets(std::vector<std::vector<int>>{
            {1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {1, 3, 5}, {1, 3, 4}});
    if (name == "MT7") return SimplicialComplex::from_facets(mt7_facets());
    if (name == "P2_6")
        return SimplicialComplex::from_facets(std::vector<std::vector<int>>{
            {1, 5, 6}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 3, 4},
            {2, 4, 6}, {2, 3, 6}, {1, 2, 4}, {1, 3, 6}, {4, 5, 6}});
    if (name == "T2_9") return SimplicialComplex::from_facets(t2_9_facets());
    throw InvalidInput("unknown builtin complex '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"K_EX", "MB",       "MT7",    "P2_6",
                                                   "T2_9", "TRI_PATH", "TRI_FAN"};
    return names;
}

}  // namespace schrome
