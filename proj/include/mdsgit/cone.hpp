#pragma once

// Rational polyhedral cones kept in both generator and inequality form.

#include "mdsgit/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mdsgit {

enum class Location { Outside, Boundary, Interior };

const char* to_string(Location loc);

/// A closed cone {x : <h, x> >= 0 for h in facets, <e, x> = 0 for e in equations}
///                = pos(rays) + span(lineality).
///
/// Canonical form: rays are primitive, sorted, duplicate free and orthogonal to the
/// lineality space; facets are primitive, sorted and lie in the linear span of the cone;
/// lineality and equations are reduced echelon bases. Two cones are equal as sets iff they
/// compare equal.
class Cone {
public:
    /// Zero cone in R^dim.
    explicit Cone(std::size_t dim = 0);

    static Cone from_generators(std::size_t dim, std::span<const IntVector> generators);
    static Cone from_generators(std::size_t dim, std::span<const RatVector> generators);
    /// Cone generated by `generators` plus the linear span of `lineality`.
    static Cone from_generators(std::size_t dim, std::span<const IntVector> generators,
                                std::span<const IntVector> lineality);
    static Cone from_inequalities(std::size_t dim, std::span<const IntVector> inequalities,
                                  std::span<const IntVector> equations = {});
    static Cone whole_space(std::size_t dim);
    static Cone halfspace(const IntVector& normal);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return ambient_ - equations_.size(); }
    std::size_t lineality_dim() const noexcept { return lineality_.size(); }
    bool is_pointed() const noexcept { return lineality_.empty(); }
    bool is_zero() const noexcept { return rays_.empty() && lineality_.empty(); }
    bool is_full_dimensional() const noexcept { return equations_.empty(); }

    const std::vector<IntVector>& rays() const noexcept { return rays_; }
    const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
    const std::vector<IntVector>& facets() const noexcept { return facets_; }
    const std::vector<IntVector>& equations() const noexcept { return equations_; }

    /// Rays together with +/- lineality basis vectors: a generating set of the cone.
    std::vector<IntVector> generators() const;

    friend bool operator==(const Cone& a, const Cone& b) = default;

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lineality_;
    std::vector<IntVector> facets_;
    std::vector<IntVector> equations_;

    friend Cone dual(const Cone&);
    friend std::pair<std::optional<Cone>, std::optional<Cone>> split(const Cone&,
                                                                      const IntVector&);
};

bool lex_less(const IntVector& a, const IntVector& b);

/// Set-wise ordering for use as a map key.
struct ConeLess {
    bool operator()(const Cone& a, const Cone& b) const;
};

Cone cone_from_generators(std::size_t dim, std::span<const RatVector> vectors);
Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(const Cone& a, const Cone& b);
Location contains(const Cone& c, const RatVector& x);
Location contains(const Cone& c, const IntVector& x);
/// Sum of the canonical rays (plus nothing from the lineality space). Throws on the zero cone.
RatVector relative_interior_point(const Cone& c);
bool is_subcone(const Cone& inner, const Cone& outer);

/// The face of `c` cut out by the valid inequality `normal` (which must be >= 0 on c).
Cone face(const Cone& c, const IntVector& normal);

/// Cuts a full-dimensional cone by the hyperplane normal^perp. Returns the parts on the
/// >= 0 and <= 0 sides, each present only when full dimensional.
std::pair<std::optional<Cone>, std::optional<Cone>> split(const Cone& c, const IntVector& normal);

}  // namespace mdsgit
