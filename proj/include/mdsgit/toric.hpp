#pragma once

// Fans, Cox's quotient construction, Gale duality and quotient fans of a linearization.

#include "mdsgit/cone.hpp"
#include "mdsgit/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mdsgit {

using IndexSet = std::vector<std::size_t>;

/// Rays in Z^dim (stored primitive) and maximal cones as sorted index sets into `rays`.
/// The cone list is kept sorted, so equal fans compare equal.
class Fan {
public:
    Fan() = default;
    /// Normalizes rays to primitive vectors and sorts the cone list. Throws ValidationError on
    /// out-of-range indices, wrong ray lengths or zero rays.
    Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> cones);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVector>& rays() const noexcept { return rays_; }
    const std::vector<IndexSet>& cones() const noexcept { return cones_; }
    /// Rays that were not primitive on input, by index.
    const std::vector<std::size_t>& normalized_rays() const noexcept { return normalized_; }

    IntegerMatrix ray_matrix() const;  // one row per ray

    /// The same fan with rays expressed in the basis that puts the n x r matrix of ray
    /// columns into Hermite normal form. Two fans related by GL(n, Z) with the same ray
    /// order have equal normalizations.
    Fan normalized() const;

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IndexSet> cones_;
    std::vector<std::size_t> normalized_;
};

struct FanReport {
    bool simplicial = true;
    bool intersections_ok = true;
    bool complete = true;
    std::vector<std::string> violations;

    bool valid() const { return simplicial && intersections_ok; }
    bool valid_complete() const { return valid() && complete; }
};

/// Checks simpliciality, that pairwise intersections are common faces, and completeness
/// (full-dimensional cones, every ridge in exactly two cones, connected dual graph).
FanReport validate_fan(const Fan& f);

/// Characters chi_1..chi_r in Z^rho, stored as columns.
class WeightSystem {
public:
    WeightSystem() = default;
    /// Throws ValidationError unless the columns have rank rho, none is zero and r >= rho.
    WeightSystem(std::size_t rho, std::vector<IntVector> columns, std::vector<Integer> torsion = {});

    std::size_t rho() const noexcept { return rho_; }
    std::size_t r() const noexcept { return columns_.size(); }
    const std::vector<IntVector>& columns() const noexcept { return columns_; }
    const IntVector& column(std::size_t i) const { return columns_.at(i); }
    /// Invariant factors > 1 of the class group that the free grading does not see.
    const std::vector<Integer>& torsion() const noexcept { return torsion_; }

    IntegerMatrix matrix() const;  // rho x r

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::size_t rho_ = 0;
    std::vector<IntVector> columns_;
    std::vector<Integer> torsion_;
};

/// Canonical basis of Z^rho for a weight matrix: the Hermite normal form taken from the
/// bottom-right corner (reverse rows and columns, HNF, reverse back).
IntegerMatrix normalize_weight_matrix(const IntegerMatrix& w);

/// Cox construction: degrees of the Cox variables in the free part of
/// Cl(X) = Z^{rays} / M. Throws ValidationError for an invalid or incomplete fan.
WeightSystem cox_weights(const Fan& f);

/// n x r matrix (n = r - rank) whose rows are a Hermite-normalized basis of the saturated
/// kernel of the weight matrix. Column i is the candidate ray for Cox variable i.
IntegerMatrix gale_dual(const WeightSystem& w);

/// Primitive normals of the hyperplanes spanned by rho - 1 independent columns, sign
/// normalized (first nonzero entry positive), sorted and deduplicated.
std::vector<IntVector> wall_hyperplanes(const WeightSystem& w);

/// All combinations of k indices out of n in lexicographic order.
std::vector<IndexSet> combinations(std::size_t n, std::size_t k);

/// Throws EmptySemistableLocus outside pos(columns) and DegenerateLinearization on a wall.
void check_generic(const WeightSystem& w, const RatVector& chi);

/// The toric model of the GIT quotient at a generic linearization.
struct Quotient {
    Fan fan;
    /// Cox column of each fan ray (ascending).
    std::vector<std::size_t> columns;
    /// Maximal cones as sets of Cox columns.
    std::vector<IndexSet> column_cones;
    /// Columns whose ray does not occur: characters of fixed divisors.
    std::vector<std::size_t> dropped;
    FanReport report;
};

Quotient quotient(const WeightSystem& w, const RatVector& chi);
Fan quotient_fan(const WeightSystem& w, const RatVector& chi);

struct UnstableLocus {
    /// Maximal supports J (sorted, lexicographic order) such that chi is not in pos(columns(J)).
    std::vector<IndexSet> strata;
    /// r - max |J|; equals r + 1 when nothing is unstable.
    std::size_t min_codimension = 0;
};

/// Computed from separating hyperplanes: every maximal unstable support has the form
/// {j : <h, chi_j> >= 0} for a wall normal h with <h, chi> < 0.
UnstableLocus unstable_locus(const WeightSystem& w, const RatVector& chi);

}  // namespace mdsgit
