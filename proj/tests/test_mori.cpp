#include "helpers.hpp"

#include "mdsgit/error.hpp"
#include "mdsgit/mori.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

Fan lib(const char* name) {
    for (const auto& [n, f] : fan_library())
        if (std::string(n) == name) return f;
    throw std::logic_error(name);
}

std::vector<WeightSystem> test_systems() {
    std::vector<WeightSystem> out{flop_weights()};
    for (const auto& [name, f] : fan_library()) out.push_back(cox_weights(f));
    out.push_back(WeightSystem(3, ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}})));
    return out;
}

std::size_t symmetric_difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out.size();
}

}  // namespace

TEST_CASE("effective cone examples") {
    CHECK(effective_cone(enumerate_chambers(blp2_weights())) == cone(2, {{1, -1}, {0, 1}}));
    CHECK(effective_cone(enumerate_chambers(cox_weights(lib("P1xP1")))) == cone(2, {{1, 0}, {0, 1}}));
    CHECK(effective_cone(enumerate_chambers(cox_weights(lib("P2")))) == cone(1, {{1}}));
}

TEST_CASE("nef chamber examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    CHECK(bl.chamber(nef_chamber(bl, lib("BlP2"))).cone == cone(2, {{1, 0}, {1, -1}}));
    ChamberComplex p2 = enumerate_chambers(cox_weights(lib("P2")));
    CHECK(nef_chamber(p2, lib("P2")) == 0);
    ChamberComplex q = enumerate_chambers(cox_weights(lib("P1xP1")));
    REQUIRE(q.chambers().size() == 1);
    CHECK(q.chamber(nef_chamber(q, lib("P1xP1"))).cone == cone(2, {{1, 0}, {0, 1}}));
    // a fan that is not a chamber quotient of these weights
    CHECK_THROWS_AS(nef_chamber(bl, lib("P1xP1")), ValidationError);
}

TEST_CASE("small modifications") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    CHECK(enumerate_sqms(bl, lib("BlP2")) == std::vector<std::size_t>{nef_chamber(bl, lib("BlP2"))});

    ChamberComplex flop = enumerate_chambers(flop_weights());
    auto ref = reference_chamber(flop);
    REQUIRE(ref);
    CHECK(enumerate_sqms(flop, *ref) == std::vector<std::size_t>{0, 1});

    ChamberComplex p2 = enumerate_chambers(cox_weights(lib("P2")));
    CHECK(enumerate_sqms(p2, lib("P2")) == std::vector<std::size_t>{0});
}

TEST_CASE("moving cone examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    MovingCone mb = moving_cone(bl, lib("BlP2"));
    CHECK(mb.convex);
    CHECK(mb.hull == cone(2, {{1, 0}, {1, -1}}));
    CHECK(mb.matches_oracle);

    MovingCone mq = moving_cone(enumerate_chambers(cox_weights(lib("P1xP1"))), lib("P1xP1"));
    CHECK(mq.hull == cone(2, {{1, 0}, {0, 1}}));
    CHECK(mq.matches_oracle);

    MovingCone mp = moving_cone(enumerate_chambers(cox_weights(lib("P2"))), lib("P2"));
    CHECK(mp.hull == cone(1, {{1}}));
}

TEST_CASE("moving cone oracle is the intersection over column deletions") {
    for (const auto& w : test_systems()) {
        Cone acc = Cone::whole_space(w.rho());
        for (std::size_t i = 0; i < w.r(); ++i) {
            std::vector<IntVector> rest;
            for (std::size_t j = 0; j < w.r(); ++j)
                if (j != i) rest.push_back(w.column(j));
            acc = intersect(acc, Cone::from_generators(w.rho(), rest));
        }
        CHECK(moving_cone_oracle(w) == acc);
    }
}

TEST_CASE("moving cone matches the oracle for every library fan") {
    for (const auto& [name, f] : fan_library()) {
        CAPTURE(name);
        ChamberComplex cc = enumerate_chambers(cox_weights(f));
        MovingCone m = moving_cone(cc, f);
        CHECK(m.convex);
        CHECK(m.matches_oracle);
    }
}

TEST_CASE("wall classification examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    WallCrossing x = classify_wall(bl, 0);
    CHECK(x.kind == CrossingKind::Divisorial);
    std::size_t nef = nef_chamber(bl, lib("BlP2"));
    auto out = factor_contraction(bl, nef, 1 - nef);
    REQUIRE(out.size() == 1);
    CHECK(out[0].kind == CrossingKind::Divisorial);
    CHECK(out[0].picard_delta == -1);
    REQUIRE(out[0].divisor);
    CHECK(bl.weights().column(*out[0].divisor) == iv({0, 1}));

    ChamberComplex flop = enumerate_chambers(flop_weights());
    WallCrossing s = classify_wall(flop, 0);
    CHECK(s.kind == CrossingKind::Small);
    CHECK(s.picard_delta == 0);
    CHECK(s.rays_before == s.rays_after);

    ChamberComplex q = enumerate_chambers(cox_weights(lib("P1xP1")));
    bool found = false;
    for (std::size_t i = 0; i < q.boundary().size(); ++i) {
        if (!(q.boundary()[i].facet == cone(2, {{1, 0}}))) continue;
        found = true;
        WallCrossing b = classify_boundary(q, i);
        CHECK(b.kind == CrossingKind::FibrationBoundary);
        CHECK(b.dimension_before == 2);
        CHECK(b.dimension_after == 1);
    }
    CHECK(found);
}

TEST_CASE("facet quotient dimension") {
    WeightSystem q = cox_weights(lib("P1xP1"));
    CHECK(facet_quotient_dimension(q, iv({0, 1})) == 1);
    CHECK(facet_quotient_dimension(cox_weights(lib("P2")), iv({1})) == 0);
}

TEST_CASE("picard number examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    std::size_t nef = nef_chamber(bl, lib("BlP2"));
    CHECK(picard_number(bl.chamber(nef)) == 2);
    CHECK(picard_number(bl.chamber(1 - nef)) == 1);
    CHECK(picard_number(enumerate_chambers(cox_weights(lib("P2"))).chamber(0)) == 1);
    ChamberComplex flop = enumerate_chambers(flop_weights());
    CHECK(!picard_number(flop.chamber(0)));
}

TEST_CASE("mori chamber data examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    std::size_t nef = nef_chamber(bl, lib("BlP2"));
    MoriChamberData other = mori_chamber_data(bl, 1 - nef);
    CHECK(other.exceptional_columns == std::vector<std::size_t>{3});
    CHECK(other.pulled_back_nef == cone(2, {{1, 0}}));
    CHECK(other.identity_holds);
    MoriChamberData own = mori_chamber_data(bl, nef);
    CHECK(own.exceptional_columns.empty());
    CHECK(own.pulled_back_nef == bl.chamber(nef).cone);

    ChamberComplex flop = enumerate_chambers(flop_weights());
    for (const auto& ch : flop.chambers()) {
        MoriChamberData d = mori_chamber_data(flop, ch.id);
        CHECK(d.exceptional_columns.empty());
        CHECK(d.identity_holds);
    }
}

TEST_CASE("factor contraction examples") {
    ChamberComplex bl = enumerate_chambers(cox_weights(lib("BlP2")));
    CHECK(factor_contraction(bl, 0, 0).empty());
    ChamberComplex flop = enumerate_chambers(flop_weights());
    auto path = factor_contraction(flop, 1, 0);
    REQUIRE(path.size() == 1);
    CHECK(path[0].kind == CrossingKind::Small);
}

TEST_CASE("wall crossing invariants on every test system") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (std::size_t i = 0; i < cc.walls().size(); ++i) {
            WallCrossing x = classify_wall(cc, i);
            CHECK(x.kind != CrossingKind::Irregular);
            auto pl = picard_number(cc.chamber(cc.walls()[i].left));
            auto pr = picard_number(cc.chamber(cc.walls()[i].right));
            if (x.kind == CrossingKind::Small) {
                CHECK(x.rays_before == x.rays_after);
                CHECK(x.picard_delta == 0);
                if (pl && pr) CHECK(*pl == *pr);
            } else if (x.kind == CrossingKind::Divisorial) {
                CHECK(symmetric_difference(x.rays_before, x.rays_after) == 1);
                CHECK((x.picard_delta == 1 || x.picard_delta == -1));
                if (pl && pr) CHECK(*pr - *pl == x.picard_delta);
            }
        }
        for (std::size_t i = 0; i < cc.boundary().size(); ++i) {
            WallCrossing b = classify_boundary(cc, i);
            CHECK((b.kind == CrossingKind::FibrationBoundary) == (b.dimension_after < b.dimension_before));
        }
    }
}

TEST_CASE("mori decomposition identity holds for every chamber") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (const auto& ch : cc.chambers()) {
            if (!ch.quotient.report.valid_complete() && !ch.quotient.dropped.empty()) continue;
            MoriChamberData d = mori_chamber_data(cc, ch.id);
            CAPTURE(ch.cone.to_string());
            CHECK(d.identity_holds);
            CHECK(d.exceptional_columns == ch.quotient.dropped);
            CHECK(is_subcone(d.pulled_back_nef, ch.cone));
            CHECK(d.pulled_back_nef.dim() + d.exceptional_columns.size() == w.rho());
        }
    }
}

TEST_CASE("factor contraction walks through distinct adjacent chambers") {
    for (const auto& w : test_systems()) {
        ChamberComplex cc = enumerate_chambers(w);
        for (std::size_t a = 0; a < cc.chambers().size(); ++a)
            for (std::size_t b = 0; b < cc.chambers().size(); ++b) {
                auto path = factor_contraction(cc, a, b);
                CHECK(path.size() <= separating_hyperplanes(cc, a, b));
                std::size_t at = a;
                std::set<std::size_t> seen{a};
                for (const auto& x : path) {
                    CHECK(x.from == at);
                    CHECK(seen.insert(x.to.value_or(a)).second);
                    REQUIRE(x.to);
                    CHECK(cc.wall_between(x.from, *x.to));
                    at = *x.to;
                }
                CHECK(at == b);
            }
    }
}
