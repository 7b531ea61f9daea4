#include <catch2/catch_amalgamated.hpp>

#include <qschur/laurent.hpp>
#include <qschur/rings.hpp>

#include <random>

using namespace qschur;

namespace {

LaurentInt random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-9, 9);
    LaurentInt x;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) x += LaurentInt::term(coeff(rng), exp(rng));
    return x;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    const LaurentInt t = LaurentInt::t();
    const LaurentInt tinv = LaurentInt::t_power(-1);
    CHECK(t * tinv == LaurentInt(1));
    CHECK((t - 1) * (t + 1) == LaurentInt::t_power(2) - 1);
    const LaurentInt x = LaurentInt::term(3, -1) + LaurentInt(7) + LaurentInt::t_power(4);
    CHECK((x + (-x)).is_zero());
    CHECK((x - x).is_zero());
    CHECK(LaurentInt{}.is_zero());
    CHECK(LaurentInt(1).is_one());
}

TEST_CASE("laurent ring laws on random samples") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const LaurentInt a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentInt(1) == a);
    }
}

TEST_CASE("laurent exact division") {
    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        const LaurentInt a = random_laurent(rng);
        LaurentInt b = random_laurent(rng);
        if (b.is_zero()) b = LaurentInt::t() + 1;
        CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(LaurentInt::t() + 1, LaurentInt(2)), std::domain_error);
}

TEST_CASE("text grammar round trip") {
    CHECK(LaurentInt::parse("3*t^-1 - 2 + t^2") ==
          LaurentInt::term(3, -1) + LaurentInt(-2) + LaurentInt::t_power(2));
    CHECK(LaurentInt::parse("0").is_zero());
    CHECK(LaurentInt::parse("t") == LaurentInt::t());
    CHECK(LaurentInt::parse("-t^3 + 5") == LaurentInt(5) - LaurentInt::t_power(3));
    CHECK(LaurentInt{}.str() == "0");

    std::mt19937 rng(999);
    for (int i = 0; i < 300; ++i) {
        const LaurentInt x = random_laurent(rng);
        const std::string s = x.str();
        CHECK(LaurentInt::parse(s) == x);
        CHECK(LaurentInt::parse(s).str() == s);
    }
    CHECK_THROWS_AS(LaurentInt::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentInt::parse("t^"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentInt::parse("2 +"), std::invalid_argument);
}

TEST_CASE("ring selector grammar") {
    CHECK(RingSpec::parse("generic").is_generic());
    CHECK(RingSpec::parse("Q:2").q_rational() == Rational(2));
    CHECK(RingSpec::parse("Q:-1").q_rational() == Rational(-1));
    CHECK(RingSpec::parse("Q:1/2").q_rational() == Rational(1, 2));
    const RingSpec f = RingSpec::parse("F5:2");
    CHECK(f.prime() == 5);
    CHECK(f.q_mod_p() == 2);
    CHECK(RingSpec::parse("F5:2").str() == "F5:2");
    CHECK(RingSpec::parse("generic").str() == "generic");
    CHECK_THROWS_AS(RingSpec::parse("Q:0"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("F4:1"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("F5:5"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("bogus"), std::invalid_argument);
}

TEST_CASE("specialize examples") {
    const LaurentInt x = LaurentInt::t() + LaurentInt::t_power(-1);
    CHECK(RingSpec::rationals_at(2).specialize(x).rational() == Rational(5, 2));
    CHECK(RingSpec::rationals_at(2).specialize(LaurentInt{}).is_zero());
    CHECK(RingSpec::prime_field_at(5, 2).specialize(LaurentInt{}).is_zero());
    CHECK(RingSpec::rationals_at(1).specialize(LaurentInt::t() - 1).is_zero());
}

TEST_CASE("specialize is a ring homomorphism on random pairs") {
    std::mt19937 rng(4242);
    const RingSpec specs[] = {RingSpec::rationals_at(2), RingSpec::rationals_at(Rational(-3, 7)),
                              RingSpec::prime_field_at(5, 2), RingSpec::prime_field_at(7, 3)};
    for (const auto& spec : specs) {
        for (int i = 0; i < 100; ++i) {
            const LaurentInt a = random_laurent(rng), b = random_laurent(rng);
            CHECK(spec.specialize(a + b) == spec.specialize(a) + spec.specialize(b));
            CHECK(spec.specialize(a * b) == spec.specialize(a) * spec.specialize(b));
        }
        CHECK(spec.specialize(LaurentInt(1)) == spec.one());
    }
}

TEST_CASE("q powers are units") {
    const RingSpec specs[] = {RingSpec::generic(), RingSpec::rationals_at(Rational(2, 3)),
                              RingSpec::prime_field_at(5, 2)};
    for (const auto& spec : specs)
        for (int k = -4; k <= 4; ++k)
            CHECK(spec.q_power(k) * spec.q_power(-k) == spec.one());
}
