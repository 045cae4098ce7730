#include "helpers.hpp"
#include "oracles.hpp"

#include "mdsgit/error.hpp"
#include "mdsgit/vgit.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<WeightSystem> test_systems() {
    std::vector<WeightSystem> out{blp2_weights(), flop_weights(), WeightSystem(2, ivs({{1, 0}, {0, 1}}))};
    for (const auto& [name, f] : fan_library()) out.push_back(cox_weights(f));
    // a rank 3 system that is not a Cox weight system of a library fan
    out.push_back(WeightSystem(3, ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}})));
    return out;
}

WeightSystem permuted(const WeightSystem& w, const std::vector<std::size_t>& perm) {
    std::vector<IntVector> cols;
    for (auto i : perm) cols.push_back(w.column(i));
    return WeightSystem(w.rho(), cols);
}

WeightSystem transformed(const WeightSystem& w, const IntegerMatrix& g) {
    std::vector<IntVector> cols;
    for (const auto& c : w.columns()) cols.push_back(g * c);
    return WeightSystem(w.rho(), cols);
}

IntegerMatrix unimodular(std::size_t rho) {
    IntegerMatrix g = IntegerMatrix::identity(rho);
    for (std::size_t i = 0; i + 1 < rho; ++i) g.add_row_multiple(i, i + 1, static_cast<long>(i) + 2);
    if (rho > 1) g.add_row_multiple(rho - 1, 0, -1);
    return g;
}

}  // namespace

TEST_CASE("G-ample cone examples") {
    CHECK(g_ample_cone(WeightSystem(1, ivs({{1}, {1}, {1}}))) == cone(1, {{1}}));
    Cone c = g_ample_cone(blp2_weights());
    CHECK(c == cone(2, {{1, -1}, {0, 1}}));
    CHECK(contains(c, iv({1, 0})) == Location::Interior);
    CHECK(g_ample_cone(WeightSystem(2, ivs({{1, 0}, {0, 1}}))) == cone(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("chambers of the quadrant weight system") {
    ChamberComplex cc = enumerate_chambers(WeightSystem(2, ivs({{1, 0}, {0, 1}})));
    REQUIRE(cc.chambers().size() == 1);
    CHECK(cc.chamber(0).cone == cone(2, {{1, 0}, {0, 1}}));
    CHECK(cc.walls().empty());
    CHECK(cc.boundary().size() == 2);
}

TEST_CASE("chambers of the blow-up of P2") {
    ChamberComplex cc = enumerate_chambers(blp2_weights());
    REQUIRE(cc.chambers().size() == 2);
    std::vector<Cone> cones{cc.chamber(0).cone, cc.chamber(1).cone};
    CHECK(std::count(cones.begin(), cones.end(), cone(2, {{1, -1}, {1, 0}})) == 1);
    CHECK(std::count(cones.begin(), cones.end(), cone(2, {{1, 0}, {0, 1}})) == 1);
    REQUIRE(cc.walls().size() == 1);
    CHECK(cc.walls()[0].facet == cone(2, {{1, 0}}));
}

TEST_CASE("chambers of the flop weights split the line at the origin") {
    ChamberComplex cc = enumerate_chambers(flop_weights());
    CHECK(cc.g_ample() == Cone::whole_space(1));
    REQUIRE(cc.chambers().size() == 2);
    CHECK(cc.chamber(0).cone == cone(1, {{-1}}));
    CHECK(cc.chamber(1).cone == cone(1, {{1}}));
    REQUIRE(cc.walls().size() == 1);
    CHECK(cc.walls()[0].facet == Cone(1));
}

TEST_CASE("enumerate_chambers rejects rank deficient input") {
    CHECK_THROWS_AS(WeightSystem(2, ivs({{1, 1}, {2, 2}, {3, 3}})), ValidationError);
}

TEST_CASE("chamber_of examples") {
    ChamberComplex cc = enumerate_chambers(blp2_weights());
    auto nef = chamber_of(cc, rv({2, -1}));
    CHECK(nef.kind == ChamberLocation::Kind::Interior);
    CHECK(cc.chamber(*nef.chamber).cone == cone(2, {{1, -1}, {1, 0}}));
    auto wall = chamber_of(cc, rv({1, 0}));
    CHECK(wall.kind == ChamberLocation::Kind::Wall);
    CHECK(cc.walls()[*wall.wall].facet == cone(2, {{1, 0}}));
    CHECK(chamber_of(cc, rv({0, 1})).kind == ChamberLocation::Kind::Boundary);
    CHECK(chamber_of(cc, rv({0, 0})).kind == ChamberLocation::Kind::LowerFace);
    CHECK_THROWS_AS(chamber_of(cc, rv({-1, 0})), EmptySemistableLocus);
}

TEST_CASE("disjoint cover checks") {
    ChamberComplex cc = enumerate_chambers(blp2_weights());
    CoverReport ok = verify_disjoint_cover(cc, 100);
    CHECK(ok.samples == 100);
    CHECK(ok.passed());

    CHECK(verify_disjoint_cover(enumerate_chambers(WeightSystem(2, ivs({{1, 0}, {0, 1}}))), 37).passed());

    CoverReport broken = verify_disjoint_cover(cc.without_chamber(1), 100);
    CHECK(!broken.passed());
    REQUIRE(!broken.violations.empty());
    CHECK(broken.violations[0].find("not covered") != std::string::npos);
}

TEST_CASE("every test complex covers its G-ample cone") {
    for (const auto& w : test_systems()) CHECK(verify_disjoint_cover(enumerate_chambers(w), 200).passed());
}

TEST_CASE("Bl2P2 chamber count matches the oracles") {
    WeightSystem w = cox_weights(fan_library()[8].fan);
    ChamberComplex cc = enumerate_chambers(w);
    std::vector<oracle::Vec> cols(w.columns().begin(), w.columns().end());
    std::size_t expected = oracle::git_class_count(cc.g_ample().rays(), cols, w.rho());
    CHECK(expected == 5);
    CHECK(oracle::region_count(cc.g_ample().rays(), oracle::arrangement(cols, w.rho())) == 5);
    CHECK(cc.chambers().size() == expected);
}

TEST_CASE("chamber counts match the GIT class oracle on every test system") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        if (!cc.g_ample().is_pointed()) continue;
        std::vector<oracle::Vec> cols(w.columns().begin(), w.columns().end());
        const auto gens = cc.g_ample().rays();
        CHECK(cc.chambers().size() == oracle::git_class_count(gens, cols, w.rho(), 5));
        CHECK(cc.chambers().size() <= oracle::region_count(gens, oracle::arrangement(cols, w.rho()), 5));
    }
}

TEST_CASE("cells with one semistable locus are glued into one chamber") {
    WeightSystem w(3, ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
    ChamberComplex cc = enumerate_chambers(w);
    CHECK(cc.chambers().size() == 7);
    auto loc = chamber_of(cc, rv({2, 1, 2}));
    CHECK(loc.kind == ChamberLocation::Kind::Interior);
    REQUIRE(loc.chamber);
    CHECK(cc.chamber(*loc.chamber).cone == cone(3, {{1, 0, 0}, {0, 0, 1}, {1, 1, 1}}));
}

TEST_CASE("chamber structure is invariant under basis change and column permutation") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        std::vector<std::size_t> perm(w.r());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 1) % perm.size();
        std::swap(perm.front(), perm.back());
        ChamberComplex p = enumerate_chambers(permuted(w, perm));
        ChamberComplex t = enumerate_chambers(transformed(w, unimodular(w.rho())));
        CHECK(p.chambers().size() == cc.chambers().size());
        CHECK(p.walls().size() == cc.walls().size());
        CHECK(t.chambers().size() == cc.chambers().size());
        CHECK(t.walls().size() == cc.walls().size());
    }
}

TEST_CASE("chamber cones are intersections of the orbit cones containing them") {
    for (const auto& w : test_systems()) {
        if (w.rho() > 3 || w.r() > 8) continue;
        ChamberComplex cc = enumerate_chambers(w);
        for (const auto& ch : cc.chambers()) {
            Cone acc = cc.g_ample();
            for (std::size_t mask = 1; mask < (std::size_t{1} << w.r()); ++mask) {
                std::vector<IntVector> cols;
                for (std::size_t i = 0; i < w.r(); ++i)
                    if (mask >> i & 1) cols.push_back(w.column(i));
                if (rank(cols) < w.rho()) continue;
                Cone s = Cone::from_generators(w.rho(), cols);
                if (contains(s, ch.representative) == Location::Interior) acc = intersect(acc, s);
            }
            CAPTURE(ch.cone.to_string());
            CHECK(acc == ch.cone);
        }
    }
}

TEST_CASE("adjacent chambers have different unstable loci") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (const auto& wall : cc.walls())
            CHECK(unstable_locus(w, cc.chamber(wall.left).representative).strata !=
                  unstable_locus(w, cc.chamber(wall.right).representative).strata);
    }
}

TEST_CASE("chamber, wall and boundary invariants") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (const auto& ch : cc.chambers()) {
            CHECK(ch.cone.is_full_dimensional());
            CHECK(ch.cone.is_pointed());
            CHECK(contains(ch.cone, ch.representative) == Location::Interior);
            CHECK(ch.quotient.report.valid());
        }
        for (const auto& wl : cc.walls()) {
            CHECK(wl.facet == intersect(cc.chamber(wl.left).cone, cc.chamber(wl.right).cone));
            CHECK(wl.facet.dim() + 1 == w.rho());
            std::vector<IntVector> on;
            for (const auto& c : w.columns())
                if (dot(wl.normal, c) == 0) on.push_back(c);
            CHECK(rank(on) + 1 == w.rho());
            CHECK(dot(wl.normal, cc.chamber(wl.right).representative) > 0);
            CHECK(dot(wl.normal, cc.chamber(wl.left).representative) < 0);
        }
        for (const auto& b : cc.boundary()) CHECK(b.facet.dim() + 1 == w.rho());
    }
}

TEST_CASE("GIT equivalence: unstable supports are constant on chamber interiors") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (const auto& ch : cc.chambers()) {
            RatVector other = ch.representative;
            const IntVector& ray = ch.cone.rays().front();
            for (std::size_t k = 0; k < other.size(); ++k) other[k] = 3 * other[k] + Rational(ray[k]);
            REQUIRE(contains(ch.cone, other) == Location::Interior);
            CHECK(unstable_locus(w, other).strata == unstable_locus(w, ch.representative).strata);
        }
    }
}

TEST_CASE("dyadic samples are deterministic and inside the cone") {
    Cone c = cone(2, {{1, -1}, {0, 1}});
    auto a = dyadic_samples(c, 50), b = dyadic_samples(c, 50);
    CHECK(a == b);
    CHECK(a.size() == 50);
    for (const auto& p : a) CHECK(contains(c, p) != Location::Outside);
}
