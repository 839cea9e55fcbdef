#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "entropy.hpp"
#include "finite_model.hpp"
#include "padic_model.hpp"
#include "product_model.hpp"
#include "shift_model.hpp"
#include "sweep.hpp"

using namespace entropia;

namespace {

Endo right_shift(const std::shared_ptr<const ShiftModel>& m)
{
    return m->shift_endo(-1, identity_endo(m->coefficient_group()));
}

Endo left_shift(const std::shared_ptr<const ShiftModel>& m)
{
    return m->shift_endo(+1, identity_endo(m->coefficient_group()));
}

} // namespace

TEST_CASE("certificates: model bound, fixed point, heuristic, budget")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(3), true, "Z3");
    Endo beta = right_shift(m);
    Subgroup u = m->chain_member(1);

    EntropyAtResult certified = entropy_by_limit(beta, u);
    CHECK(certified.trajectory.certified);
    CHECK(certified.trajectory.certificate.find("bound") != std::string::npos);

    auto fm = FiniteModel::create(symmetric_group(3), "S3");
    EngineOptions no_bounds;
    no_bounds.use_model_bounds = false;
    // without a model bound the trajectory still hits a fixed point
    EntropyAtResult fixed = entropy_by_limit(fm->endo_from_map(identity_endo(fm->group()).map),
                                             fm->whole_group(), no_bounds);
    CHECK(fixed.trajectory.certified);
    CHECK(fixed.trajectory.certificate.find("fixed point") != std::string::npos);
    CHECK(fixed.value.is_zero());

    // no certificate: the window heuristic stops the scan, uncertified
    EntropyAtResult heuristic = entropy_by_limit(beta, u, no_bounds);
    CHECK(!heuristic.trajectory.certified);
    CHECK(heuristic.trajectory.certificate.find("heuristic") != std::string::npos);
    CHECK(heuristic.value == EntropyValue::log_of(Factored::from_integer(3)));

    // neither certificate nor heuristic window within the budget
    EngineOptions strangled = no_bounds;
    strangled.heuristic_window = 100;
    strangled.iteration_budget = 6;
    try {
        entropy_by_limit(beta, u, strangled);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IterationBudgetExceeded);
    }
}

TEST_CASE("entropy needs a compact open normal base subgroup")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(2), true, "Z2");
    CHECK_THROWS_AS(entropy_by_limit(right_shift(m), m->whole_group()), Error);
    CHECK_THROWS_AS(inverse_invariant_hull(right_shift(m), m->trivial_subgroup()), Error);
}

TEST_CASE("both entropy routes agree on a scenario battery")
{
    std::vector<std::pair<Endo, EntropyValue>> battery;
    for (int n : {2, 3, 5, 6}) {
        auto m = ShiftModel::create(FiniteGroup::cyclic(n), true);
        battery.emplace_back(right_shift(m), EntropyValue::log_of(Factored::from_integer(n)));
        battery.emplace_back(left_shift(m), EntropyValue::zero());
        battery.emplace_back(m->identity_endo(), EntropyValue::zero());
    }
    {
        auto m = ShiftModel::create(symmetric_group(3), true, "S3");
        battery.emplace_back(right_shift(m), EntropyValue::log_of(Factored::from_integer(6)));
        battery.emplace_back(left_shift(m), EntropyValue::zero());
    }
    for (long long p : {2, 3}) {
        auto qp = PAdicModel::create(p);
        for (long long v = -2; v <= 2; ++v)
            battery.emplace_back(qp->mult_endo(v),
                                 v >= 0 ? EntropyValue::zero()
                                        : EntropyValue::log_of(Factored::prime_power(p, -v)));
    }
    for (const auto& [phi, expected] : battery) {
        SupResult lf = algebraic_entropy(phi);
        SupResult lim = algebraic_entropy_via_limit(phi);
        REQUIRE(lf.value == expected);
        REQUIRE(lim.value == expected);
        REQUIRE(lf.chain_verified);
    }
}

TEST_CASE("random finite endomorphisms: zero entropy through both routes")
{
    for (const auto& [name, g] : group_catalog(12)) {
        auto model = FiniteModel::create(g, name);
        for (const auto& e : sample_endos(g, 4, 99)) {
            Endo phi = model->endo_from_map(e.map);
            REQUIRE(algebraic_entropy(phi).value.is_zero());
            REQUIRE(algebraic_entropy_via_limit(phi).value.is_zero());
        }
    }
}

TEST_CASE("entropy grows along the chain")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(4), true, "Z4");
    for (const Endo& phi : {right_shift(m), left_shift(m), m->identity_endo(),
                            m->shift_endo(-2, identity_endo(m->coefficient_group()))}) {
        EntropyValue prev;
        for (int k = 1; k <= 4; ++k) {
            EntropyValue v = entropy_limit_free(phi, m->chain_member(k));
            if (k > 1)
                REQUIRE(v.compare(prev) >= 0);
            prev = v;
        }
    }
}

TEST_CASE("hull properties by brute force on finite models")
{
    std::mt19937 rng(5);
    for (const auto& [name, g] : group_catalog(16)) {
        (void)name;
        auto model = FiniteModel::create(g, name);
        auto endos = sample_endos(g, 3, rng());
        auto normals = all_normal_subgroups(g);
        for (const auto& e : endos) {
            Endo phi = model->endo_from_map(e.map);
            for (const auto& uset : normals) {
                Subgroup u = model->subgroup_from_elements(uset);
                HullResult hull = inverse_invariant_hull(phi, u);

                // inversely invariant and above u
                REQUIRE(contains(hull.hull, u));
                REQUIRE(contains(hull.hull, preimage(phi, hull.hull)));
                // recurrence: hull = u * preimage(hull)
                REQUIRE(equal(hull.hull, product(u, preimage(phi, hull.hull))));
                // index transfer: [hull : pre] = [u : u n pre]
                Subgroup pre = preimage(phi, hull.hull);
                REQUIRE(index(hull.hull, pre).value ==
                        index(u, intersect(u, pre)).value);

                // minimality over all inversely invariant subgroups above u
                for (const auto& hset : all_subgroups(g)) {
                    Subgroup h = model->subgroup_from_elements(hset);
                    if (contains(h, u) && contains(h, preimage(phi, h)))
                        REQUIRE(contains(h, hull.hull));
                }
            }
        }
    }
}

TEST_CASE("iterated preimages of the trajectory recover the hull iterates")
{
    // phi^{-n}(T_n) equals the preimage of the (n-1)-th hull iterate
    std::mt19937 rng(17);
    for (const auto& [name, g] : group_catalog(12)) {
        (void)name;
        auto model = FiniteModel::create(g, name);
        for (const auto& e : sample_endos(g, 3, rng())) {
            Endo phi = model->endo_from_map(e.map);
            Subgroup u = model->whole_group();
            auto normals = all_normal_subgroups(g);
            if (!normals.empty())
                u = model->subgroup_from_elements(normals[rng() % normals.size()]);

            // hull iterates u^(0) = u, u^(k+1) = u * preimage(u^(k))
            std::vector<Subgroup> iterates{u};
            for (int k = 0; k < 4; ++k)
                iterates.push_back(product(u, preimage(phi, iterates.back())));

            for (int n = 1; n <= 4; ++n) {
                Subgroup t = trajectory(phi, u, n);
                Subgroup lhs = t;
                for (int j = 0; j < n; ++j)
                    lhs = preimage(phi, lhs);
                Subgroup rhs = preimage(phi, iterates[static_cast<std::size_t>(n - 1)]);
                REQUIRE(equal(lhs, rhs));
            }
        }
    }
}

TEST_CASE("trajectory subgroups are normal in later trajectory subgroups")
{
    std::mt19937 rng(23);
    for (const auto& [name, g] : group_catalog(10)) {
        (void)name;
        auto model = FiniteModel::create(g, name);
        for (const auto& e : sample_endos(g, 2, rng())) {
            Endo phi = model->endo_from_map(e.map);
            for (const auto& uset : all_normal_subgroups(g)) {
                Subgroup u = model->subgroup_from_elements(uset);
                for (int n = 1; n <= 3; ++n)
                    for (int m = 0; n + m <= 4; ++m) {
                        ElemSet tn = FiniteModel::elements_of(trajectory(phi, u, n));
                        ElemSet tnm = FiniteModel::elements_of(trajectory(phi, u, n + m));
                        // conjugation inside the bigger trajectory subgroup
                        bool normal_inside = true;
                        for (int x : tnm)
                            for (int a : tn)
                                if (!std::binary_search(
                                        tn.begin(), tn.end(),
                                        g.mul(g.mul(x, a), g.inv(x))))
                                    normal_inside = false;
                        REQUIRE(normal_inside);
                    }
            }
        }
    }
}

TEST_CASE("automorphism adjunction between image and preimage")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(4), true, "Z4");
    std::vector<Endo> autos = {right_shift(m), left_shift(m),
                               m->shift_endo(-1, power_endo(m->coefficient_group(), 3)),
                               m->identity_endo()};
    std::vector<Subgroup> handles = {m->chain_member(1), m->chain_member(3),
                                     m->rect_subgroup(whole_set(m->coefficient_group()),
                                                      trivial_set(m->coefficient_group()), 0,
                                                      {closure(m->coefficient_group(), {2})})};
    for (const Endo& phi : autos)
        for (const Subgroup& a : handles) {
            REQUIRE(equal(image(phi, preimage(phi, a)), a));
            REQUIRE(equal(preimage(phi, image(phi, a)), a));
        }

    auto qp = PAdicModel::create(5);
    Endo mul = qp->mult_endo(2);
    Subgroup lvl = qp->level_subgroup(-1);
    REQUIRE(equal(image(mul, preimage(mul, lvl)), lvl));
    REQUIRE(equal(preimage(mul, image(mul, lvl)), lvl));
}

TEST_CASE("preimage distributes over products, with equality for automorphisms")
{
    std::mt19937 rng(31);
    auto fm = FiniteModel::create(symmetric_group(3), "S3");
    auto subs = all_normal_subgroups(fm->group());
    for (const auto& e : sample_endos(fm->group(), 6, rng())) {
        Endo phi = fm->endo_from_map(e.map);
        bool automorphism = is_automorphism(phi);
        for (const auto& aset : subs)
            for (const auto& bset : subs) {
                Subgroup a = fm->subgroup_from_elements(aset);
                Subgroup b = fm->subgroup_from_elements(bset);
                Subgroup lhs = preimage(phi, product(a, b));
                Subgroup rhs = product(preimage(phi, a), preimage(phi, b));
                REQUIRE(contains(lhs, rhs));
                if (automorphism)
                    REQUIRE(equal(lhs, rhs));
            }
    }
}

TEST_CASE("modulus: frozen values, multiplicativity, triviality on finite models")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(6), true, "Z6");
    CHECK(modulus(right_shift(m)) == Factored::from_integer(6));
    CHECK(modulus(left_shift(m)) ==
          Factored::from_integer(1).divided_by(Factored::from_integer(6)));
    CHECK(modulus(m->identity_endo()).is_one());

    // multiplicative on pairs of automorphisms
    std::vector<Endo> autos = {right_shift(m), left_shift(m), m->identity_endo(),
                               m->shift_endo(-2, power_endo(m->coefficient_group(), 5))};
    for (const Endo& f : autos)
        for (const Endo& g : autos)
            REQUIRE(modulus(compose(f, g)) == modulus(f).times(modulus(g)));

    // compact and discrete models have modulus 1
    for (const auto& [name, g] : group_catalog(12)) {
        (void)name;
        auto fm = FiniteModel::create(g, name);
        for (const auto& a : all_automorphisms(g))
            REQUIRE(modulus(fm->endo_from_map(a.map)).is_one());
    }

    // not defined for non-automorphisms
    auto fm = FiniteModel::create(FiniteGroup::cyclic(4), "Z4");
    CHECK_THROWS_AS(modulus(fm->endo_from_multiplier(2)), Error);
}

TEST_CASE("topological entropy on the implemented models")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(3), true, "Z3");
    CHECK(topological_entropy(m->identity_endo()).value.is_zero());

    // on the mirrored model the forward shift expands chain members
    auto dual_like = ShiftModel::create(FiniteGroup::cyclic(3), false, "Z3");
    Endo expanding = dual_like->shift_endo(+1, identity_endo(dual_like->coefficient_group()));
    CHECK(topological_entropy(expanding).value ==
          EntropyValue::log_of(Factored::from_integer(3)));
    Endo contracting = dual_like->shift_endo(-1, identity_endo(dual_like->coefficient_group()));
    CHECK(topological_entropy(contracting).value.is_zero());

    auto fm = FiniteModel::create(symmetric_group(3), "S3");
    for (const auto& e : sample_endos(fm->group(), 5, 3))
        REQUIRE(topological_entropy(fm->endo_from_map(e.map)).value.is_zero());
}

TEST_CASE("product models compute componentwise")
{
    auto m2 = ShiftModel::create(FiniteGroup::cyclic(2), true, "Z2");
    auto q3 = PAdicModel::create(3);
    auto prod = ProductModel::create(m2, q3);
    Endo joint = prod->pair_endo(right_shift(m2), q3->mult_endo(-1));
    EntropyValue h = algebraic_entropy(joint).value;
    CHECK(h == EntropyValue::log_of(Factored::from_integer(6)));
    CHECK(algebraic_entropy_via_limit(joint).value == h);
    CHECK(modulus(joint) == Factored::from_integer(6));

    Subgroup u = prod->chain_member(2);
    CHECK(u.compact());
    CHECK(u.open());
    CHECK(u.normal());
    Index ix = index(prod->chain_member(2), prod->chain_member(1));
    CHECK(ix.value == Factored::from_integer(6));
}
