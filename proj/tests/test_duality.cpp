#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "duality.hpp"
#include "entropy.hpp"

using namespace entropia;

namespace {

// annihilator by plain enumeration of all characters
ElemSet annihilator_by_enumeration(const FinAbPresentation& pres, const ElemSet& subgroup)
{
    ElemSet out;
    for (long long y = 0; y < pres.order(); ++y) {
        bool kills = true;
        for (int h : subgroup)
            if (pres.pairing(h, y) != 0) {
                kills = false;
                break;
            }
        if (kills)
            out.push_back(static_cast<int>(y));
    }
    return out;
}

std::vector<FinAbPresentation> presentation_zoo()
{
    std::vector<FinAbPresentation> out;
    for (auto factors : std::vector<std::vector<long long>>{
             {2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {8}, {3, 3}, {12}, {2, 12}, {2, 2, 4},
             {4, 4}, {2, 4, 8}, {64}})
        out.push_back(FinAbPresentation::make(factors));
    return out;
}

MatrixEndo random_matrix_endo(const FinAbPresentation& pres, std::mt19937& rng)
{
    const std::size_t k = pres.factors.size();
    std::vector<std::vector<long long>> entries(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long step = pres.factors[i] / std::gcd(pres.factors[i], pres.factors[j]);
            long long slots = pres.factors[i] / step;
            entries[i][j] = step * static_cast<long long>(rng() % slots);
        }
    return make_matrix_endo(pres, entries);
}

} // namespace

TEST_CASE("presentation validation and the pairing")
{
    CHECK_THROWS_AS(FinAbPresentation::make({4, 2}), Error);  // not divisibility-ascending
    CHECK_THROWS_AS(FinAbPresentation::make({0}), Error);
    FinAbPresentation ones = FinAbPresentation::make({1, 1});
    CHECK(ones.factors.empty()); // trivial factors are dropped
    CHECK(ones.order() == 1);

    FinAbPresentation p = FinAbPresentation::make({2, 4});
    CHECK(p.order() == 8);
    CHECK(p.lcm() == 4);
    for (long long x = 0; x < 8; ++x)
        CHECK(p.encode(p.decode(x)) == x);

    // bilinear
    for (long long x = 0; x < 8; ++x)
        for (long long y = 0; y < 8; ++y) {
            CHECK(p.pairing(x, y) == p.pairing(y, x));
            for (long long z = 0; z < 8; ++z)
                CHECK(p.pairing(p.add(x, z), y) ==
                      (p.pairing(x, y) + p.pairing(z, y)) % p.lcm());
        }
    // non-degenerate
    for (long long x = 1; x < 8; ++x) {
        bool all_zero = true;
        for (long long y = 0; y < 8 && all_zero; ++y)
            all_zero = p.pairing(x, y) == 0;
        CHECK(!all_zero);
    }
}

TEST_CASE("annihilators: congruence solve equals character enumeration")
{
    std::mt19937 rng(41);
    for (const auto& pres : presentation_zoo()) {
        FiniteGroup g = pres.as_table_group();
        for (const auto& sub : all_subgroups(g)) {
            ElemSet got = annihilator(pres, sub);
            ElemSet expected = annihilator_by_enumeration(pres, sub);
            REQUIRE(got == expected);

            // order product and double annihilator
            REQUIRE(static_cast<long long>(sub.size()) *
                        static_cast<long long>(got.size()) ==
                    pres.order());
            REQUIRE(annihilator(pres, got) == sub);
        }
        (void)rng;
    }
}

TEST_CASE("annihilator swaps sums and intersections")
{
    FinAbPresentation pres = FinAbPresentation::make({2, 12});
    FiniteGroup g = pres.as_table_group();
    auto subs = all_subgroups(g);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const ElemSet& h1 = subs[rng() % subs.size()];
        const ElemSet& h2 = subs[rng() % subs.size()];
        ElemSet sum = set_product(g, h1, h2);
        ElemSet meet = set_intersection(h1, h2);
        REQUIRE(annihilator(pres, sum) ==
                set_intersection(annihilator(pres, h1), annihilator(pres, h2)));
        REQUIRE(annihilator(pres, meet) ==
                set_product(g, annihilator(pres, h1), annihilator(pres, h2)));
    }
}

TEST_CASE("frozen small annihilators")
{
    FinAbPresentation z4 = FinAbPresentation::make({4});
    CHECK(annihilator(z4, {0}) == ElemSet{0, 1, 2, 3});
    CHECK(annihilator(z4, {0, 1, 2, 3}) == ElemSet{0});
    CHECK(annihilator(z4, {0, 2}) == ElemSet{0, 2}); // order two on both sides
}

TEST_CASE("adjoint endomorphisms: identity, multiplication, exhaustive matrices")
{
    FinAbPresentation zn = FinAbPresentation::make({12});
    MatrixEndo id = make_matrix_endo(zn, {{1}});
    MatrixEndo idd = dual_endo(zn, id);
    CHECK(idd.entries[0][0] == 1);
    MatrixEndo m5 = make_matrix_endo(zn, {{5}});
    CHECK(dual_endo(zn, m5).entries[0][0] == 5);

    FinAbPresentation p = FinAbPresentation::make({2, 4});
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        MatrixEndo m = random_matrix_endo(p, rng);
        MatrixEndo n = dual_endo(p, m);
        for (long long x = 0; x < p.order(); ++x)
            for (long long y = 0; y < p.order(); ++y)
                REQUIRE(p.pairing(apply_matrix(p, m, x), y) ==
                        p.pairing(x, apply_matrix(p, n, y)));
        // double adjoint comes back
        MatrixEndo nn = dual_endo(p, n);
        for (long long x = 0; x < p.order(); ++x)
            REQUIRE(apply_matrix(p, nn, x) == apply_matrix(p, m, x));
    }
    CHECK_THROWS_AS(make_matrix_endo(p, {{1, 0}, {1, 1}}), Error); // 4 | 1*2 fails
}

TEST_CASE("dual of a quotient has the order and factors of the subquotient")
{
    for (const auto& pres : presentation_zoo()) {
        if (pres.order() > 24)
            continue;
        FiniteGroup g = pres.as_table_group();
        auto subs = all_subgroups(g);
        for (const auto& a : subs)
            for (const auto& b : subs) {
                if (!set_contains(a, b))
                    continue;
                ElemSet a_perp = annihilator(pres, a);
                ElemSet b_perp = annihilator(pres, b);
                REQUIRE(a.size() / b.size() == b_perp.size() / a_perp.size());
                REQUIRE(subquotient_invariant_factors(pres, a, b) ==
                        subquotient_invariant_factors(pres, b_perp, a_perp));
            }
    }
}

TEST_CASE("annihilator of a preimage is the image of the annihilator")
{
    std::mt19937 rng(29);
    int checked = 0;
    for (const auto& pres : presentation_zoo()) {
        FiniteGroup g = pres.as_table_group();
        auto subs = all_subgroups(g);
        for (int trial = 0; trial < 8; ++trial) {
            MatrixEndo m = random_matrix_endo(pres, rng);
            MatrixEndo md = dual_endo(pres, m);
            const ElemSet& u = subs[rng() % subs.size()];

            ElemSet pre;
            {
                std::vector<char> in(static_cast<std::size_t>(pres.order()), 0);
                for (long long x = 0; x < pres.order(); ++x)
                    if (std::binary_search(u.begin(), u.end(),
                                           static_cast<int>(apply_matrix(pres, m, x))))
                        in[static_cast<std::size_t>(x)] = 1;
                for (long long x = 0; x < pres.order(); ++x)
                    if (in[static_cast<std::size_t>(x)])
                        pre.push_back(static_cast<int>(x));
            }
            ElemSet lhs = annihilator(pres, pre);
            ElemSet rhs;
            {
                std::vector<char> in(static_cast<std::size_t>(pres.order()), 0);
                for (int y : annihilator(pres, u))
                    in[static_cast<std::size_t>(apply_matrix(pres, md, y))] = 1;
                for (long long y = 0; y < pres.order(); ++y)
                    if (in[static_cast<std::size_t>(y)])
                        rhs.push_back(static_cast<int>(y));
            }
            REQUIRE(lhs == rhs);
            ++checked;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("abelian decomposition recovers invariant factors")
{
    CHECK(decompose_abelian(FiniteGroup::cyclic(6)).pres.factors ==
          std::vector<long long>{6});
    CHECK(decompose_abelian(FiniteGroup::cyclic(1)).pres.factors.empty());
    CHECK(decompose_abelian(FiniteGroup::direct_product_orders({2, 4, 3})).pres.factors ==
          std::vector<long long>{2, 12});
    CHECK(decompose_abelian(FiniteGroup::direct_product_orders({2, 2})).pres.factors ==
          std::vector<long long>{2, 2});
    CHECK_THROWS_AS(decompose_abelian(symmetric_group(3)), Error);

    // the coordinate map is an isomorphism
    FiniteGroup g = FiniteGroup::direct_product_orders({4, 6});
    AbelianDecomposition dec = decompose_abelian(g);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            REQUIRE(dec.elem_to_code[static_cast<std::size_t>(g.mul(a, b))] ==
                    dec.pres.add(dec.elem_to_code[static_cast<std::size_t>(a)],
                                 dec.elem_to_code[static_cast<std::size_t>(b)]));
}

TEST_CASE("dual shift models flip orientation and negate the offset")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(4), true, "Z4");
    Endo beta = m->shift_endo(-1, identity_endo(m->coefficient_group()));
    DualModelResult dual = dual_shift_model(m, beta);
    auto dm = std::static_pointer_cast<const ShiftModel>(dual.model);
    CHECK(!dm->left_compact());
    CHECK(ShiftModel::shift_of(dual.endo).s == 1);
    CHECK(dm->coefficient_group().order() == 4);

    // duals of coefficient maps are adjoint coordinatewise: mult-by-m stays
    Endo scaled = m->shift_endo(0, power_endo(m->coefficient_group(), 3));
    DualModelResult dual2 = dual_shift_model(m, scaled);
    CHECK(ShiftModel::shift_of(dual2.endo).s == 0);
    CHECK(ShiftModel::shift_of(dual2.endo).theta ==
          power_endo(std::static_pointer_cast<const ShiftModel>(dual2.model)
                         ->coefficient_group(),
                     3));

    auto s3 = ShiftModel::create(symmetric_group(3), true, "S3");
    CHECK_THROWS_AS(dual_shift_model(s3, s3->identity_endo()), Error);
}

TEST_CASE("handles dualize to coordinatewise annihilators with swapped tails")
{
    auto m = ShiftModel::create(FiniteGroup::cyclic(4), true, "Z4");
    Endo beta = m->shift_endo(-1, identity_endo(m->coefficient_group()));
    auto dm = std::static_pointer_cast<const ShiftModel>(dual_shift_model(m, beta).model);

    Subgroup u = m->rect_subgroup(whole_set(m->coefficient_group()),
                                  trivial_set(m->coefficient_group()), 1,
                                  {closure(m->coefficient_group(), {2})});
    Subgroup du = dual_rect_subgroup(m, dm, u);
    const RectRep& r = ShiftModel::rect_of(du);
    CHECK(r.left_tail == ElemSet{0});            // annihilator of everything
    CHECK(r.right_tail.size() == 4);             // annihilator of the trivial subgroup
    CHECK(r.cell_at(1) == ElemSet{0, 2});        // self-annihilating middle cell

    // per-coordinate pairing vanishes between a handle and its dual
    FinAbPresentation pres = FinAbPresentation::make({4});
    for (long long i = -2; i <= 3; ++i) {
        const ElemSet cell = ShiftModel::rect_of(u).cell_at(i);
        const ElemSet dual_cell = r.cell_at(i);
        for (int a : cell)
            for (int b : dual_cell)
                REQUIRE(pres.pairing(a, b) == 0);
    }
}

TEST_CASE("algebraic entropy transfers to topological entropy across the dual")
{
    for (int n : {2, 3, 4, 6}) {
        auto m = ShiftModel::create(FiniteGroup::cyclic(n), true);
        for (long long s : {-1LL, 0LL, 1LL}) {
            Endo phi = m->shift_endo(s, identity_endo(m->coefficient_group()));
            DualModelResult dual = dual_shift_model(m, phi);
            CAPTURE(n);
            CAPTURE(s);
            REQUIRE(algebraic_entropy(phi).value == topological_entropy(dual.endo).value);
        }
    }
    auto v4 = ShiftModel::create(FiniteGroup::direct_product_orders({2, 2}), true, "Z2xZ2");
    FiniteEndoMap swap = make_endo(v4->coefficient_group(), {0, 2, 1, 3});
    Endo twisted = v4->shift_endo(-1, swap);
    DualModelResult dual = dual_shift_model(v4, twisted);
    CHECK(algebraic_entropy(twisted).value == topological_entropy(dual.endo).value);
}
