#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "pmfp/catalog.hpp"
#include "pmfp/contraction.hpp"
#include "pmfp/errors.hpp"
#include "pmfp/kernels.hpp"

using namespace pmfp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[maybe_unused]] bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

PiecewiseMap scaling(double a, const SetDescriptor& guard) {
    PiecewiseMap t("scale");
    t.add_rule(guard, a, 0.0);
    return t;
}

}  // namespace

TEST_CASE("inclusions hold around the hybrid cycle") {
    const auto entry = make_hybrid_unit();
    const auto cert = verify_inclusions(*entry.map, *entry.decomposition, 100);
    CHECK(cert.condition == Condition::C1);
    CHECK(cert.holds);
    CHECK(cert.margin == 1.0);
    CHECK(cert.witness.empty());
    CHECK(cert.pairs_checked == 200);  // one sample per set
    CHECK(cert.density == 100);
    CHECK_FALSE(cert.alpha_used.has_value());
}

TEST_CASE("a broken inclusion reports the first escaping point") {
    PiecewiseMap shift("shift");
    shift.add_rule(SetDescriptor::closed(0.0, 1.0), 1.0, 0.5);
    const CyclicDecomposition decomp{
        {SetDescriptor::closed(0.0, 0.5), SetDescriptor::closed(0.5, 1.0)}};
    const auto cert = verify_inclusions(shift, decomp, 50);
    CHECK_FALSE(cert.holds);
    CHECK(cert.margin == -1.0);
    // T(A) = [0.5,1] stays in B, so the first failure is B's left edge.
    CHECK(cert.witness == std::vector<double>{0.5, 1.0});
    CHECK(cert.witness_lhs == 1.0);
}

TEST_CASE("alpha estimation finds the hybrid ratio 1/2 at the corner") {
    const auto entry = make_hybrid_unit();
    const auto est = estimate_alpha(entry.space, *entry.map, *entry.decomposition, 100);
    CHECK(est.alpha_hat == 0.5);
    REQUIRE(est.has_witness);
    CHECK(est.x == 0.0);
    CHECK(est.y == 1.0);
    CHECK(est.num == 0.5);
    CHECK(est.den == 1.0);
    CHECK(est.pairs_checked == 20000);
}

TEST_CASE("alpha estimation flags the cycling pair as non-contractive") {
    const auto entry = make_counterexample();
    const auto est = estimate_alpha(entry.space, *entry.map, *entry.decomposition, 100);
    CHECK(est.alpha_hat == 1.0);
    REQUIRE(est.has_witness);
    CHECK(est.x == 0.0);
    CHECK(est.y == 1.5);
    CHECK(est.num == 1.5);
    CHECK(est.den == 1.5);
    CHECK(est.pairs_checked == 20200);
}

TEST_CASE("alpha estimation handles degenerate and explosive pairs") {
    const auto space = make_max_space(SetDescriptor::closed(0.0, 3.0));

    // Single pair with zero distance on both sides: vacuous.
    const auto still = scaling(0.5, SetDescriptor::closed(0.0, 3.0));
    const auto vac = estimate_alpha(space, still, {0.0}, {0.0});
    CHECK(vac.alpha_hat == 0.0);
    CHECK_FALSE(vac.has_witness);
    CHECK(vac.pairs_checked == 1);

    // A map that inflates a zero-distance pair rules out every alpha.
    PiecewiseMap up("up");
    up.add_rule(SetDescriptor::closed(0.0, 3.0), 1.0, 1.0);
    const auto boom = estimate_alpha(space, up, {0.0}, {0.0});
    CHECK(boom.alpha_hat == kInf);
    REQUIRE(boom.has_witness);
    CHECK(boom.x == 0.0);
    CHECK(boom.y == 0.0);
    CHECK(boom.num == 1.0);
}

TEST_CASE("C2 certificate for the hybrid pair at alpha 3/4") {
    const auto entry = make_hybrid_unit();
    const auto cert = verify_c2(entry.space, *entry.map, *entry.decomposition, 0.75, 100);
    CHECK(cert.condition == Condition::C2);
    CHECK(cert.holds);
    CHECK(cert.alpha_used == 0.75);
    CHECK(cert.margin == 0.0);  // tight at the shared midpoint
    CHECK(cert.witness == std::vector<double>{0.5, 0.5});
    CHECK(cert.pairs_checked == 20000);
    CHECK(cert.pairs_skipped == 0);
}

TEST_CASE("C2 fails on the cycling pair just below alpha = 1") {
    const auto entry = make_counterexample();
    const auto cert = verify_c2(entry.space, *entry.map, *entry.decomposition, 0.99, 100);
    CHECK_FALSE(cert.holds);
    CHECK(cert.margin == doctest::Approx(-0.015));
    CHECK(cert.margin < 0.0);
    CHECK(cert.witness == std::vector<double>{0.0, 1.5});
    CHECK(cert.witness_lhs == 1.5);
    CHECK(cert.witness_rhs == 0.99 * 1.5);
    CHECK(cert.pairs_checked == 20200);
}

TEST_CASE("contraction constants must lie strictly inside (0,1)") {
    const auto entry = make_hybrid_unit();
    for (double bad : {0.0, 1.0, -0.5, 1.5}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(
            verify_c2(entry.space, *entry.map, *entry.decomposition, bad, 10),
            ArgumentError);
        CHECK_THROWS_AS(
            verify_partial_cyclic(entry.space, *entry.map, *entry.decomposition,
                                  bad, 10),
            ArgumentError);
        CHECK_THROWS_AS(verify_orbital(entry.space, *entry.map, {0.0}, bad),
                        ArgumentError);
    }
}

TEST_CASE("PC2 holds with zero margin on the cycling pair") {
    const auto entry = make_counterexample();
    const auto cert =
        verify_partial_cyclic(entry.space, *entry.map, *entry.decomposition, 0.9, 100);
    CHECK(cert.condition == Condition::PC2);
    CHECK(cert.holds);
    CHECK(cert.margin == 0.0);
    CHECK(cert.witness == std::vector<double>{0.0, 1.5});
    CHECK(cert.witness_lhs == 1.5);
    CHECK(cert.witness_rhs == 1.5);  // dominated by p(y,y) at y = 3/2
}

TEST_CASE("the alpha-free variant certifies PC2 without a constant") {
    const auto entry = make_counterexample();
    const auto cert = verify_partial_cyclic_alpha_free(entry.space, *entry.map,
                                                       *entry.decomposition, 100);
    CHECK(cert.condition == Condition::PC2);
    CHECK(cert.holds);
    CHECK(cert.margin == 0.0);
    CHECK_FALSE(cert.alpha_used.has_value());
}

TEST_CASE("the one-set inequality fails on the full cycling space") {
    const auto entry = make_counterexample();
    const auto xs = entry.default_sample(100);
    const auto cert = verify_rako(entry.space, *entry.map, xs, 0.9);
    CHECK(cert.condition == Condition::RakoPC2);
    CHECK_FALSE(cert.holds);
    // T inflates the zero-self-distance point 0 to 3/2.
    CHECK(cert.witness == std::vector<double>{0.0, 0.0});
    CHECK(cert.witness_lhs == 1.5);
    CHECK(cert.witness_rhs == 0.0);
    CHECK(cert.margin == -1.5);

    // The same inequality is comfortable for x/2 on the half-line.
    const auto max_entry = make_max_entry();
    const auto ok = verify_rako(max_entry.space, *max_entry.map,
                                max_entry.default_sample(100), 0.9);
    CHECK(ok.holds);
}

TEST_CASE("orbital condition rates each point against its own orbit") {
    const auto entry = make_counterexample();
    const auto xs = entry.default_sample(100);
    const auto bad = verify_orbital(entry.space, *entry.map, xs, 0.9);
    CHECK(bad.condition == Condition::Orbital);
    CHECK_FALSE(bad.holds);
    CHECK(bad.margin == doctest::Approx(-0.15));
    CHECK(bad.witness == std::vector<double>{0.0});
    CHECK(bad.witness_lhs == 1.5);
    CHECK(bad.pairs_checked == xs.size());

    const auto max_entry = make_max_entry();
    const auto pts = max_entry.default_sample(100);
    CHECK(verify_orbital(max_entry.space, *max_entry.map, pts, 0.6).holds);
    const auto tight = verify_orbital(max_entry.space, *max_entry.map, pts, 0.4);
    CHECK_FALSE(tight.holds);
    CHECK(tight.witness == std::vector<double>{pts.back()});

    const auto vac = verify_orbital(max_entry.space, *max_entry.map, {}, 0.5);
    CHECK(vac.holds);
    CHECK(vac.margin == kInf);
    CHECK(vac.witness.empty());
}

TEST_CASE("strict condition separates halving, identity, and the cycle") {
    const auto max_entry = make_max_entry();
    const CyclicDecomposition whole{{max_entry.space.domain()}};

    const auto half = verify_strict(max_entry.space, *max_entry.map, whole, 100);
    CHECK(half.condition == Condition::Strict);
    CHECK(half.holds);
    CHECK(half.margin > 0.0);
    CHECK(half.pairs_checked == 10000);
    CHECK(half.pairs_skipped == 1);  // only the pair (0,0) lacks distance
    CHECK_FALSE(half.alpha_used.has_value());

    PiecewiseMap identity("id");
    identity.add_rule(max_entry.space.domain(), 1.0, 0.0);
    const auto id = verify_strict(max_entry.space, identity, whole, 100);
    CHECK_FALSE(id.holds);  // margin 0 is not strict
    CHECK(id.margin == 0.0);

    const auto entry = make_counterexample();
    const auto cyc = verify_strict(entry.space, *entry.map, *entry.decomposition, 100);
    CHECK_FALSE(cyc.holds);
    CHECK(cyc.margin == 0.0);
    CHECK(cyc.witness == std::vector<double>{0.0, 1.5});
    CHECK(cyc.witness_lhs == 1.5);
    CHECK(cyc.witness_rhs == 1.5);
}

TEST_CASE("vacuous scans certify trivially with an empty witness") {
    const auto space = make_max_space(SetDescriptor::closed(0.0, 4.0));
    const auto t = scaling(0.5, SetDescriptor::closed(0.0, 4.0));
    const auto empty_side = SetDescriptor::interval(2.0, 2.0, false, false);
    const auto cert =
        verify_c2(space, t, SetDescriptor::closed(0.0, 1.0), empty_side, 0.5, 10);
    CHECK(cert.holds);
    CHECK(cert.margin == kInf);
    CHECK(cert.witness.empty());
    CHECK(cert.pairs_checked == 0);
}

TEST_CASE("gluing joins agreeing halves and rejects disagreeing ones") {
    const auto A = SetDescriptor::closed(0.0, 2.0);
    const auto B = SetDescriptor::closed(2.0, 4.0);
    PiecewiseMap f("f");
    f.add_rule(A, 0.5, 0.0);  // x/2, f(2) = 1
    PiecewiseMap g("g");
    g.add_rule(B, 0.25, 0.5);  // x/4 + 1/2, g(2) = 1

    const auto glued = glue_pair(f, g, A, B, 50);
    CHECK(glued.name() == "glued(f, g)");
    CHECK(glued.apply(1.0) == 0.5);
    CHECK(glued.apply(2.0) == 1.0);   // overlap resolved to f's side
    CHECK(glued.apply(4.0) == 1.5);
    CHECK(glued.covers(3.0));

    PiecewiseMap h("h");
    h.add_rule(B, 0.25, 0.0);  // h(2) = 0.5 disagrees with f(2) = 1
    try {
        glue_pair(f, h, A, B, 50);
        FAIL("expected GluingError");
    } catch (const GluingError& e) {
        CHECK(e.witness == 2.0);
        CHECK(e.f_value == 1.0);
        CHECK(e.g_value == 0.5);
    }
}

TEST_CASE("a glued pair carries a C2-style certificate labeled PAIR") {
    const auto space = make_max_space(SetDescriptor::closed(0.0, 4.0));
    const auto A = SetDescriptor::closed(0.0, 2.0);
    const auto B = SetDescriptor::closed(2.0, 4.0);
    PiecewiseMap f("f");
    f.add_rule(A, 0.5, 0.0);
    PiecewiseMap g("g");
    g.add_rule(B, 0.25, 0.5);
    const auto glued = glue_pair(f, g, A, B, 50);

    const auto good = certify_pair(space, glued, A, B, 0.6, 60);
    CHECK(good.condition == Condition::Pair);
    CHECK(good.holds);
    CHECK(good.alpha_used == 0.6);

    const auto bad = certify_pair(space, glued, A, B, 0.4, 60);
    CHECK_FALSE(bad.holds);
    CHECK(bad.margin < 0.0);
}

TEST_CASE("rho_p and X_p pick out the minimal self-distance") {
    const auto entry = make_counterexample();
    const auto xp = compute_Xp(entry.space, entry.default_sample(100));
    CHECK(xp.rho_p == 0.0);
    CHECK(xp.xp == std::vector<double>{0.0});

    // A uniformly lifted rule keeps rho_p strictly positive.
    MetricRule rule;
    rule.kind = MetricRule::Kind::Custom;
    rule.fallback = MetricExpr::parse("max(x,y) + 0.25");
    const PartialMetric lifted("lifted", SetDescriptor::closed(0.0, 1.0), rule);
    const auto lifted_xp = compute_Xp(lifted, sample(lifted.domain(), 50));
    CHECK(lifted_xp.rho_p == 0.25);
    CHECK(lifted_xp.xp == std::vector<double>{0.0});

    CHECK_THROWS_AS(compute_Xp(entry.space, {}), ArgumentError);
}

TEST_CASE("hypothesis strength orders as expected on random scalings") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> coef(0.05, 0.9);
    const auto domain = SetDescriptor::closed(0.0, 4.0);
    const auto space = make_max_space(domain);

    for (int trial = 0; trial < 25; ++trial) {
        const double a = coef(rng);
        const auto t = scaling(a, domain);
        const CyclicDecomposition whole{{domain}};
        const std::size_t density = 20 + static_cast<std::size_t>(trial);

        const auto est = estimate_alpha(space, t, whole, density);
        CAPTURE(a);
        CHECK(est.alpha_hat == doctest::Approx(a).epsilon(1e-12));

        const double above = 0.5 * (a + 1.0);
        const auto c2 = verify_c2(space, t, whole, above, density);
        CHECK(c2.holds);

        // C2 at alpha implies PC2 at the same alpha, the strict condition,
        // and C2 at every larger alpha.
        CHECK(verify_partial_cyclic(space, t, whole, above, density).holds);
        CHECK(verify_strict(space, t, whole, density).holds);
        const double larger = 0.5 * (above + 1.0);
        const auto c2_larger = verify_c2(space, t, whole, larger, density);
        CHECK(c2_larger.holds);
        CHECK(c2_larger.margin >= c2.margin);

        // And C2 fails below the measured ratio.
        if (a > 0.1) {
            const auto c2_below = verify_c2(space, t, whole, a * 0.5, density);
            CHECK_FALSE(c2_below.holds);
        }
    }
}

TEST_CASE("certificates are identical under both kernel backends") {
#ifdef PMFP_HAVE_AVX2_BACKEND
    if (!kernels::cpu_has_avx2()) return;
    const auto entry_h = make_hybrid_unit();
    const auto entry_c = make_counterexample();

    const auto run_all = [&] {
        struct Snapshot {
            Certificate c2h, c2c, pc2, strict_c;
            AlphaEstimate est;
        } s;
        s.c2h = verify_c2(entry_h.space, *entry_h.map, *entry_h.decomposition,
                          0.75, 73);
        s.c2c = verify_c2(entry_c.space, *entry_c.map, *entry_c.decomposition,
                          0.99, 73);
        s.pc2 = verify_partial_cyclic(entry_c.space, *entry_c.map,
                                      *entry_c.decomposition, 0.9, 73);
        s.strict_c = verify_strict(entry_c.space, *entry_c.map,
                                   *entry_c.decomposition, 73);
        s.est = estimate_alpha(entry_c.space, *entry_c.map,
                               *entry_c.decomposition, 73);
        return s;
    };

    kernels::force_backend(&kernels::scalar::ops);
    const auto ref = run_all();
    kernels::force_backend(&kernels::avx2::ops);
    const auto vec = run_all();
    kernels::force_backend(nullptr);

    const auto same_cert = [&](const Certificate& x, const Certificate& y) {
        CHECK(x.holds == y.holds);
        CHECK(same_bits(x.margin, y.margin));
        CHECK(x.witness == y.witness);
        CHECK(same_bits(x.witness_lhs, y.witness_lhs));
        CHECK(same_bits(x.witness_rhs, y.witness_rhs));
        CHECK(x.pairs_checked == y.pairs_checked);
        CHECK(x.pairs_skipped == y.pairs_skipped);
    };
    same_cert(ref.c2h, vec.c2h);
    same_cert(ref.c2c, vec.c2c);
    same_cert(ref.pc2, vec.pc2);
    same_cert(ref.strict_c, vec.strict_c);
    CHECK(same_bits(ref.est.alpha_hat, vec.est.alpha_hat));
    CHECK(ref.est.x == vec.est.x);
    CHECK(ref.est.y == vec.est.y);
#endif
}
