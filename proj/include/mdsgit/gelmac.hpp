#pragma once

// Linearizations of (P^1)^n under the diagonal SL2 action: the walls l_S, the chambers of
// the positive orthant, and the Picard-number bookkeeping relating each GIT quotient to
// M_{0,n} (rho(Q) + e_U is the same for every chamber).

#include "mdsgit/cone.hpp"
#include "mdsgit/vgit.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mdsgit {

using Subset = std::uint32_t;  // bit i set <=> point i+1 in S

inline constexpr std::size_t kDefaultMaxPoints = 8;

struct GelMacWall {
    Subset subset = 0;     // |S| <= n/2; for |S| = n/2 the representative containing point 1
    IntVector functional;  // l_S = sum_{i in S} x_i - sum_{i not in S} x_i
};

struct GelMacChamber {
    std::size_t id = 0;
    Cone cone;
    IntVector representative;  // primitive integer interior point
    bool stable = false;       // every singleton functional negative
};

struct GelMacConfig {
    std::size_t n = 0;
    std::vector<GelMacWall> walls;
    std::vector<GelMacChamber> chambers;
    Subdivision complex;
    std::size_t seed = 0;  // chamber with l_S < 0 for every S not containing 1, 2 <= ... |S| <= n-2

    /// Index of the wall hyperplane of a subdivision adjacency.
    std::size_t wall_of(const Subdivision::Adjacency& a) const;
};

/// 2^{n-1} - C(n,2) - 1.
long m0n_picard_number(std::size_t n);

/// Walls and the subdivision of the positive orthant of R^n by all of them. Throws
/// ValidationError for n < 4 or n > max_n.
GelMacConfig build_config(std::size_t n, std::size_t max_n = kDefaultMaxPoints);

long subset_functional(const std::vector<long>& x, Subset s);
std::string subset_string(Subset s);  // 1-based, e.g. "{1,3}"

/// e_U: the number of subsets S with 3 <= |S| <= n-2 and l_S(x) < 0. Throws
/// DegenerateLinearization when x lies on a wall.
std::size_t exceptional_count(const GelMacConfig& cfg, const IntVector& x);

/// Change rho(Q_A) - rho(Q_B) when crossing W_S from the side where l_S < 0 (A) to the
/// side where l_S > 0 (B): one exchanged locus is a divisor iff its subset has two points.
long picard_jump(std::size_t n, Subset s);

struct PicardPropagation {
    std::vector<std::optional<long>> rho;               // per chamber; empty if unstable
    std::vector<std::vector<std::size_t>> first_path;   // chamber sequence from the seed
    std::vector<std::vector<std::size_t>> second_path;  // empty when no second route exists
    std::vector<std::optional<long>> rho_second;
    std::size_t inconsistent_walls = 0;  // stable walls whose jump disagrees with the values
};

/// Propagates rho from the seed (rho = 1, Q = P^{n-3}) breadth-first along walls between
/// stable chambers, then recomputes it for each chamber along a second route that avoids the
/// last wall of the first (for the seed: a loop back to itself).
PicardPropagation propagate_picard(const GelMacConfig& cfg);

/// rho(Q) for the chamber containing x. Throws ValidationError for unstable chambers.
long quotient_picard(const GelMacConfig& cfg, const IntVector& x);

struct RhoRow {
    std::size_t chamber = 0;
    IntVector representative;
    bool stable = false;
    long rho = 0;
    long rho_second_path = 0;
    std::size_t exceptional = 0;
    std::size_t first_path_length = 0;
    std::size_t second_path_length = 0;
    bool distinct_paths = false;
    bool passed = true;
};

struct RhoReport {
    std::size_t n = 0;
    long expected = 0;
    std::size_t chambers = 0;
    std::size_t stable_chambers = 0;
    long seed_rho = 0;
    std::size_t inconsistent_walls = 0;
    std::vector<RhoRow> rows;
    bool passed = false;
};

RhoReport verify_rho_formula(const GelMacConfig& cfg);

}  // namespace mdsgit
