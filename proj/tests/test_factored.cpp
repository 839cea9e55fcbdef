#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "factored.hpp"

using namespace entropia;

TEST_CASE("factored integers multiply and divide exactly")
{
    Factored six = Factored::from_integer(6);
    Factored ten = Factored::from_integer(10);
    CHECK(six.times(ten) == Factored::from_integer(60));
    CHECK(six.times(ten).decimal() == "60");
    CHECK(Factored::from_integer(60).divided_by(six) == ten);
    CHECK(Factored::from_integer(1).is_one());
    CHECK(six.pow(0).is_one());
    CHECK(six.pow(3) == Factored::from_integer(216));
    CHECK_THROWS_AS(Factored::from_integer(0), Error);
}

TEST_CASE("rationals keep negative exponents and render as fractions")
{
    Factored half = Factored::from_integer(1).divided_by(Factored::from_integer(2));
    CHECK(!half.is_integer());
    CHECK(half.decimal() == "1/2");
    CHECK(half.format() == "2^-1");
    Factored q = Factored::from_integer(8).divided_by(Factored::from_integer(6));
    CHECK(q.decimal() == "4/3");
}

TEST_CASE("comparison is exact far past 64-bit range")
{
    Factored a = Factored::from_integer(6).pow(63);
    Factored b = Factored::from_integer(2).pow(63).times(Factored::from_integer(3).pow(63));
    CHECK(a == b);
    CHECK(a.compare(b) == 0);

    // 2^100 vs 3^63: log2 says 100 vs ~99.86
    Factored two100 = Factored::from_integer(2).pow(100);
    Factored three63 = Factored::from_integer(3).pow(63);
    CHECK(two100.compare(three63) == 1);
    CHECK(three63.compare(two100) == -1);

    CHECK(Factored::from_integer(1000).compare(Factored::from_integer(2).pow(10)) == -1);
    CHECK(Factored::from_integer(6).pow(63).decimal() ==
          "10556714443828879617693714491135314434982743638016");
}

TEST_CASE("entropy values form a log-scale arithmetic")
{
    EntropyValue zero = EntropyValue::zero();
    EntropyValue log2 = EntropyValue::log_of(Factored::from_integer(2));
    EntropyValue log3 = EntropyValue::log_of(Factored::from_integer(3));

    CHECK(zero.is_zero());
    CHECK(log2.plus(log3) == EntropyValue::log_of(Factored::from_integer(6)));
    CHECK(log2.plus(zero) == log2);
    CHECK(log2.minus(log2).is_zero());
    CHECK(log2.scaled(3) == EntropyValue::log_of(Factored::from_integer(8)));
    CHECK(log2.scaled(0).is_zero());
    CHECK(log2.compare(log3) < 0);
    CHECK(log2.format() == "log 2");
    CHECK(zero.format() == "0");
    CHECK(std::abs(log2.log_natural() - std::log(2.0)) < 1e-12);
}

TEST_CASE("infinity absorbs addition but scales to zero at power zero")
{
    EntropyValue inf = EntropyValue::infinity();
    EntropyValue log2 = EntropyValue::log_of(Factored::from_integer(2));
    CHECK(inf.is_infinite());
    CHECK(inf.plus(log2).is_infinite());
    CHECK(log2.plus(inf).is_infinite());
    CHECK(inf.minus(log2).is_infinite());
    CHECK(inf.scaled(0).is_zero());
    CHECK(inf.scaled(5).is_infinite());
    CHECK(inf.compare(log2) > 0);
    CHECK(inf.format() == "infinity");
    CHECK_THROWS_AS(log2.minus(inf), Error);
}

TEST_CASE("index values carry infinity")
{
    Index inf = Index::infinity();
    Index eight = Index::finite(Factored::from_integer(8));
    CHECK(inf.infinite);
    CHECK(!eight.infinite);
    CHECK(eight == Index::finite(Factored::from_integer(2).pow(3)));
    CHECK(!(inf == eight));
}
