#pragma once

// GIT chamber decomposition of the G-ample cone of a torus action on affine space.

#include "mdsgit/cone.hpp"
#include "mdsgit/toric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdsgit {

/// Full-dimensional cells cut out of a cone by a list of central hyperplanes, with the
/// codimension-one adjacencies between them.
struct Subdivision {
    struct Adjacency {
        std::size_t left = 0;
        std::size_t right = 0;
        Cone facet;
        IntVector normal;  // primitive, >= 0 on right, <= 0 on left
    };
    struct BoundaryFacet {
        std::size_t cell = 0;
        Cone facet;
        IntVector normal;  // inward facet normal of the cell
    };

    std::vector<Cone> cells;  // sorted by ConeLess
    std::vector<Adjacency> walls;
    std::vector<BoundaryFacet> boundary;
};

/// Splits `support` (full dimensional) by each hyperplane in order, drops lower-dimensional
/// pieces and matches facets.
Subdivision subdivide(const Cone& support, std::span<const IntVector> hyperplanes);

struct Chamber {
    std::size_t id = 0;
    Cone cone;
    RatVector representative;  // interior point off every hyperplane of wall_hyperplanes()
    Quotient quotient;
};

struct Wall {
    std::size_t left = 0;
    std::size_t right = 0;
    Cone facet;
    IntVector normal;  // >= 0 on the right chamber
};

struct BoundaryFacet {
    std::size_t chamber = 0;
    Cone facet;
    IntVector normal;  // inward
};

class ChamberComplex {
public:
    ChamberComplex(WeightSystem weights, Cone g_ample, std::vector<Chamber> chambers,
                   std::vector<Wall> walls, std::vector<BoundaryFacet> boundary,
                   std::vector<IntVector> hyperplanes);

    const WeightSystem& weights() const noexcept { return weights_; }
    const Cone& g_ample() const noexcept { return g_ample_; }
    const std::vector<Chamber>& chambers() const noexcept { return chambers_; }
    const Chamber& chamber(std::size_t id) const { return chambers_.at(id); }
    const std::vector<Wall>& walls() const noexcept { return walls_; }
    const std::vector<BoundaryFacet>& boundary() const noexcept { return boundary_; }
    const std::vector<IntVector>& hyperplanes() const noexcept { return hyperplanes_; }

    /// Index into walls() of the wall between two chambers, if they are adjacent.
    std::optional<std::size_t> wall_between(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> neighbours(std::size_t id) const;

    /// Copy without one chamber (and its walls); for negative controls.
    ChamberComplex without_chamber(std::size_t id) const;

private:
    WeightSystem weights_;
    Cone g_ample_;
    std::vector<Chamber> chambers_;
    std::vector<Wall> walls_;
    std::vector<BoundaryFacet> boundary_;
    std::vector<IntVector> hyperplanes_;
};

Cone g_ample_cone(const WeightSystem& w);

/// GIT chambers of the G-ample cone: the hyperplane arrangement cells, with adjacent cells of
/// equal semistable locus glued. Quotient models are computed for every chamber.
ChamberComplex enumerate_chambers(const WeightSystem& w);

struct ChamberLocation {
    enum class Kind { Interior, Wall, Boundary, LowerFace };
    Kind kind = Kind::Interior;
    std::optional<std::size_t> chamber;  // Interior: the chamber; otherwise a chamber containing chi
    std::optional<std::size_t> wall;     // Wall: index into walls()
    std::optional<std::size_t> boundary; // Boundary: index into boundary()
};

const char* to_string(ChamberLocation::Kind kind);

/// Throws EmptySemistableLocus when chi is outside the G-ample cone.
ChamberLocation chamber_of(const ChamberComplex& cc, const RatVector& chi);

struct CoverReport {
    std::size_t samples = 0;
    std::size_t interior_hits = 0;
    std::size_t face_hits = 0;
    std::vector<std::string> violations;  // uncovered or doubly covered witnesses
    bool passed() const { return violations.empty(); }
};

/// Deterministic dyadic grid of points sum_i c_i g_i over the G-ample generators; each must
/// lie in exactly one chamber interior or on a recorded chamber face.
CoverReport verify_disjoint_cover(const ChamberComplex& cc, std::size_t samples);

/// The same grid, exposed for tests: `count` points with coefficients k / 2^level.
std::vector<RatVector> dyadic_samples(const Cone& c, std::size_t count);

}  // namespace mdsgit
