#pragma once

// Mori-theoretic reading of a chamber complex: nef / moving / effective cones, small
// modifications, wall classification and factorization of contractions.

#include "mdsgit/cone.hpp"
#include "mdsgit/toric.hpp"
#include "mdsgit/vgit.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mdsgit {

enum class CrossingKind {
    Small,              // quotient ray sets agree: flip / isomorphism in codimension one
    Divisorial,         // ray sets differ by one column: that divisor is contracted
    FibrationBoundary,  // boundary facet of the G-ample cone where the quotient dimension drops
    Boundary,           // boundary facet without dimension drop
    Irregular,          // ray sets differ in some other way
};

const char* to_string(CrossingKind kind);

struct WallCrossing {
    std::optional<std::size_t> wall;      // index into walls(); empty for boundary facets
    std::optional<std::size_t> boundary;  // index into boundary()
    std::size_t from = 0;                 // chamber left behind
    std::optional<std::size_t> to;        // chamber entered (empty at the boundary)
    CrossingKind kind = CrossingKind::Small;
    std::vector<std::size_t> rays_before;  // Cox columns used by the quotient fan
    std::vector<std::size_t> rays_after;
    /// Change in the number of quotient rays; equals the change in Picard number whenever
    /// both quotients are complete.
    long picard_delta = 0;
    /// Column whose divisor is contracted (divisorial crossings, in the direction of travel
    /// it is the column in rays_before and not in rays_after; or the reverse for extractions).
    std::optional<std::size_t> divisor;
    std::size_t dimension_before = 0;  // quotient dimensions (boundary facets only differ)
    std::size_t dimension_after = 0;
};

Cone effective_cone(const ChamberComplex& cc);

/// The chamber whose quotient reproduces the reference fan: its Cox weights agree with the
/// complex up to a change of basis and the maximal cones match. Throws ValidationError if none does.
std::size_t nef_chamber(const ChamberComplex& cc, const Fan& reference);

/// For weight inputs without a fan: the lowest chamber whose quotient uses every column.
std::optional<std::size_t> reference_chamber(const ChamberComplex& cc);

/// Chambers whose quotient uses the same Cox columns as the reference chamber.
std::vector<std::size_t> enumerate_sqms(const ChamberComplex& cc, std::size_t reference);
std::vector<std::size_t> enumerate_sqms(const ChamberComplex& cc, const Fan& reference);

struct MovingCone {
    std::vector<std::size_t> chambers;  // the small modifications
    Cone hull;                          // convex hull of their union
    bool convex = false;                // union == hull
    Cone oracle;                        // intersection over i of pos(columns != i)
    bool matches_oracle = false;        // convex and hull == oracle
};

/// Intersection of pos(columns without i) over all i.
Cone moving_cone_oracle(const WeightSystem& w);
MovingCone moving_cone(const ChamberComplex& cc, std::size_t reference);
MovingCone moving_cone(const ChamberComplex& cc, const Fan& reference);

/// Left-to-right classification of an interior wall.
WallCrossing classify_wall(const ChamberComplex& cc, std::size_t wall);
/// Classification of a boundary facet of the G-ample cone.
WallCrossing classify_boundary(const ChamberComplex& cc, std::size_t boundary);

/// Dimension of the GIT quotient at a linearization in the relative interior of a G-ample
/// boundary facet: (#columns on the facet hyperplane) - rank of those columns.
std::size_t facet_quotient_dimension(const WeightSystem& w, const IntVector& facet_normal);

/// #rays - dim for complete quotient fans; empty (undefined) otherwise.
std::optional<long> picard_number(const Chamber& ch);

struct MoriChamberData {
    std::size_t chamber = 0;
    std::vector<std::size_t> exceptional_columns;
    Cone pulled_back_nef;
    Cone sum;               // pulled_back_nef + pos(exceptional columns)
    bool identity_holds = false;  // sum == chamber cone
};

/// The pullback of Nef(Q) is computed through piecewise linear support functions on the
/// quotient fan. Throws ValidationError when the quotient is incomplete and divisors are
/// contracted.
MoriChamberData mori_chamber_data(const ChamberComplex& cc, std::size_t chamber);

/// Chamber-to-chamber path along a perturbed segment between representatives, one crossing
/// per wall met. Empty when from == to.
std::vector<WallCrossing> factor_contraction(const ChamberComplex& cc, std::size_t from,
                                             std::size_t to);
/// The number of wall hyperplanes separating the two representatives.
std::size_t separating_hyperplanes(const ChamberComplex& cc, std::size_t from, std::size_t to);

}  // namespace mdsgit
