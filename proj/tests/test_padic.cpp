#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "entropy.hpp"
#include "padic_model.hpp"

using namespace entropia;

TEST_CASE("prime is validated")
{
    CHECK_THROWS_AS(PAdicModel::create(4), Error);
    CHECK_THROWS_AS(PAdicModel::create(1), Error);
    CHECK(PAdicModel::create(2)->prime() == 2);
}

TEST_CASE("level arithmetic: product, meet, index, containment")
{
    auto qp = PAdicModel::create(2);
    Subgroup l0 = qp->level_subgroup(0);
    Subgroup l3 = qp->level_subgroup(3);
    Subgroup lm2 = qp->level_subgroup(-2);

    CHECK(equal(product(l0, l3), l0));     // min level
    CHECK(equal(intersect(l0, lm2), l0));  // max level
    CHECK(equal(product(l0, l0), l0));

    Index ix = index(l0, l3);
    CHECK(!ix.infinite);
    CHECK(ix.value == Factored::from_integer(8)); // [Z_2 : 8Z_2]

    CHECK(contains(lm2, l3));
    CHECK(!contains(l3, lm2));
    CHECK_THROWS_AS(index(l3, l0), Error);

    Subgroup whole = qp->whole_group();
    Subgroup triv = qp->trivial_subgroup();
    CHECK(contains(whole, l3));
    CHECK(contains(l3, triv));
    CHECK(index(whole, l0).infinite);
    CHECK(index(l0, triv).infinite);
    CHECK(index(whole, whole).value.is_one());
    CHECK(whole.open());
    CHECK(!whole.compact());
    CHECK(triv.compact());
    CHECK(!triv.open());
    CHECK(l0.compact());
    CHECK(l0.open());
}

TEST_CASE("preimage and image move levels by the valuation")
{
    auto qp = PAdicModel::create(5);
    Endo mul_p = qp->mult_endo(1);
    Subgroup l0 = qp->level_subgroup(0);
    CHECK(equal(preimage(mul_p, l0), qp->level_subgroup(-1)));
    CHECK(equal(image(mul_p, l0), qp->level_subgroup(1)));
    CHECK(equal(preimage(qp->identity_endo(), l0), l0));
    CHECK(equal(image(qp->identity_endo(), l0), l0));

    Endo zero = qp->mult_endo(std::nullopt);
    CHECK(equal(preimage(zero, l0), qp->whole_group()));
    CHECK(equal(image(zero, l0), qp->trivial_subgroup()));
    CHECK(!is_automorphism(zero));
    CHECK_THROWS_AS(inverse(zero), Error);
    CHECK(equal(*qp->kernel(zero), qp->whole_group()));
    CHECK(equal(*qp->kernel(mul_p), qp->trivial_subgroup()));
}

TEST_CASE("closed-form entropy matches both generic routes")
{
    for (long long p : {2, 3, 5, 7}) {
        auto qp = PAdicModel::create(p);
        for (long long v = -4; v <= 4; ++v) {
            Endo phi = qp->mult_endo(v);
            EntropyValue expected = qp->closed_form_entropy(phi);
            EntropyValue lf = algebraic_entropy(phi).value;
            EntropyValue lim = algebraic_entropy_via_limit(phi).value;
            CAPTURE(p);
            CAPTURE(v);
            REQUIRE(lf == expected);
            REQUIRE(lim == expected);
            if (v >= 0)
                REQUIRE(expected.is_zero());
            else
                REQUIRE(expected == EntropyValue::log_of(Factored::prime_power(p, -v)));
        }
    }
    auto q2 = PAdicModel::create(2);
    CHECK_THROWS_AS(q2->closed_form_entropy(q2->mult_endo(std::nullopt)), Error);
    CHECK(algebraic_entropy(q2->mult_endo(std::nullopt)).value.is_zero());
}

TEST_CASE("trajectory ratios are constant from the first step")
{
    auto q3 = PAdicModel::create(3);
    Endo phi = q3->mult_endo(-1);
    Subgroup u = q3->level_subgroup(0);
    CHECK(q3->stabilization_bound(phi, u) == 2);

    EntropyAtResult at = entropy_by_limit(phi, u);
    CHECK(at.trajectory.certified);
    REQUIRE(at.trajectory.beta.size() >= 2);
    CHECK(at.trajectory.beta[0] == Factored::from_integer(3));
    CHECK(at.trajectory.beta[1] == Factored::from_integer(3));
    CHECK(at.trajectory.t[2] == Factored::from_integer(9)); // t_3 = p^2

    // v >= 0: the trajectory is constant
    EntropyAtResult still = entropy_by_limit(q3->mult_endo(2), q3->level_subgroup(-5));
    CHECK(still.value.is_zero());
}

TEST_CASE("modulus is the scaling factor p^{-v}")
{
    for (long long p : {2, 3}) {
        auto qp = PAdicModel::create(p);
        for (long long v = -2; v <= 2; ++v) {
            Factored expected = Factored::prime_power(p, -v);
            if (v == 0)
                expected = Factored();
            REQUIRE(modulus(qp->mult_endo(v)) == expected);
        }
    }
}

TEST_CASE("inverse-invariant hull: shrink means fixed point, growth means the whole group")
{
    auto q3 = PAdicModel::create(3);
    Subgroup u = q3->level_subgroup(0);

    HullResult contract = inverse_invariant_hull(q3->mult_endo(-1), u);
    CHECK(equal(contract.hull, u));
    CHECK(!contract.closed_form);

    HullResult expand = inverse_invariant_hull(q3->mult_endo(1), u);
    CHECK(equal(expand.hull, q3->whole_group()));
    CHECK(expand.closed_form);

    // entropy via a user-supplied inversely invariant subgroup
    EntropyValue via = entropy_of_inverse_invariant(q3->mult_endo(-1), u);
    CHECK(via == EntropyValue::log_of(Factored::from_integer(3)));
    CHECK_THROWS_AS(entropy_of_inverse_invariant(q3->mult_endo(1), u), Error);
}

TEST_CASE("restriction and quotient exist only at the lattice ends")
{
    auto q3 = PAdicModel::create(3);
    Endo phi = q3->mult_endo(1);
    InducedPair top = q3->restriction_and_quotient(phi, q3->whole_group());
    CHECK(top.quot_model->is_compact()); // trivial group
    InducedPair bottom = q3->restriction_and_quotient(phi, q3->trivial_subgroup());
    CHECK(bottom.quot_model->kind() == ModelKind::PAdic);
    CHECK_THROWS_AS(q3->restriction_and_quotient(phi, q3->level_subgroup(0)), Error);
}
