#pragma once

#include "mdsgit/cone.hpp"
#include "mdsgit/error.hpp"
#include "mdsgit/linalg.hpp"
#include "mdsgit/toric.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testing {

using namespace mdsgit;

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline std::vector<IntVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> out;
    for (auto r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

inline Cone cone(std::size_t dim, std::initializer_list<std::initializer_list<long>> gens) {
    auto vs = ivs(gens);
    return Cone::from_generators(dim, vs);
}

struct NamedFan {
    const char* name;
    Fan fan;
};

inline Fan hirzebruch(long a) {
    return Fan(2, ivs({{1, 0}, {0, 1}, {-1, a}, {0, -1}}), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

/// The complete-fan test library.
inline std::vector<NamedFan> fan_library() {
    std::vector<NamedFan> out;
    out.push_back({"P2", Fan(2, ivs({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {1, 2}, {0, 2}})});
    out.push_back({"P1xP1", Fan(2, ivs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), {{0, 2}, {0, 3}, {1, 2}, {1, 3}})});
    out.push_back({"P1xP1xP1",
                   Fan(3, ivs({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
                       {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}})});
    out.push_back({"F0", hirzebruch(0)});
    out.push_back({"F1", hirzebruch(1)});
    out.push_back({"F2", hirzebruch(2)});
    out.push_back({"F3", hirzebruch(3)});
    out.push_back({"BlP2", Fan(2, ivs({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}), {{0, 3}, {1, 3}, {1, 2}, {0, 2}})});
    out.push_back({"Bl2P2", Fan(2, ivs({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}),
                                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})});
    out.push_back({"P112", Fan(2, ivs({{1, 0}, {0, 1}, {-1, -2}}), {{0, 1}, {1, 2}, {0, 2}})});
    return out;
}

inline WeightSystem blp2_weights() { return WeightSystem(2, ivs({{1, -1}, {1, -1}, {1, 0}, {0, 1}})); }
inline WeightSystem flop_weights() { return WeightSystem(1, ivs({{1}, {1}, {-1}, {-1}})); }

inline IntVector random_vector(std::mt19937_64& rng, std::size_t dim, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntVector v(dim);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace testing
