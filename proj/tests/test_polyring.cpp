#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfib/mpoly.hpp"
#include "test_util.hpp"

using namespace qfib;
using testutil::make_rng;
using testutil::random_nonzero_poly;
using testutil::random_nonzero_rational;
using testutil::random_poly;
using testutil::random_rational;

namespace {
MPoly P(const std::string& text) { return parse_canonical_text(text); }
} // namespace

TEST_CASE("addition") {
    CHECK(MPoly::x() + MPoly::zero() == MPoly::x());
    CHECK(P("x^2 + q*s") + P("-q*s") == P("x^2"));
    CHECK(P("x^2 + s") + P("x^2 + s") == P("2*x^2 + 2*s"));
    CHECK((P("x + 1") - P("x + 1")).is_zero());

    MPoly self = P("x^2 + s");
    self += self;
    CHECK(self == P("2*x^2 + 2*s"));
    self -= self;
    CHECK(self.is_zero());
}

TEST_CASE("multiplication") {
    CHECK(P("x + s") * P("x - s") == P("x^2 - s^2"));
    CHECK(MPoly::x() * P("x^2 + q*s") == P("x^3 + q*s*x"));
    CHECK(P("x^2 + 2*s") * P("x^2 + s") == P("x^4 + 3*s*x^2 + 2*s^2"));
}

TEST_CASE("pow") {
    CHECK(pow(P("x^2 + q*s"), 0) == MPoly::one());
    CHECK(pow(MPoly::x(), 3) == P("x^3"));
    CHECK(pow(P("x + 1"), 2) == P("x^2 + 2*x + 1"));
}

TEST_CASE("exact_div examples") {
    CHECK(exact_div(P("x^3 + q*s*x"), MPoly::x()) == P("x^2 + q*s"));
    CHECK(exact_div(P("x^4 + 3*s*x^2 + 2*s^2"), P("x^2 + s")) == P("x^2 + 2*s"));
    CHECK(exact_div(P("x^2 + q*s"), MPoly::s()) == P("s^-1*x^2 + q"));
    CHECK_THROWS_AS(exact_div(P("x + 1"), MPoly::x()), NonDivisibleError);
    CHECK_THROWS_AS(exact_div(P("2*x"), P("3")), NonDivisibleError);
    CHECK_THROWS_AS(exact_div(MPoly::one(), MPoly::zero()), DivisionByZeroError);
    CHECK(exact_div(MPoly::zero(), P("x + s")).is_zero());
    // Laurent divisor with several terms: quotient simply re-centers
    CHECK(exact_div(P("x^2 + q*s"), P("s^-1*x^2 + q")) == P("s"));
}

TEST_CASE("exact_div round-trips products") {
    auto rng = make_rng(11);
    for (int i = 0; i < 300; ++i) {
        const MPoly a = random_poly(rng);
        const MPoly b = random_nonzero_poly(rng);
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("subst_s_scale") {
    CHECK(subst_s_scale(P("x^2 + q*s"), 1) == P("x^2 + q^2*s"));
    CHECK(subst_s_scale(P("x^2 + q*s"), 0) == P("x^2 + q*s"));
    CHECK(subst_s_scale(P("q^4*s^2"), 2) == P("q^8*s^2"));

    auto rng = make_rng(12);
    std::uniform_int_distribution<long> sh(-4, 4);
    for (int i = 0; i < 200; ++i) {
        const MPoly a = random_poly(rng);
        const long j = sh(rng), k = sh(rng);
        CHECK(subst_s_scale(subst_s_scale(a, j), k) == subst_s_scale(a, j + k));
    }
}

TEST_CASE("subst_q_value") {
    CHECK(subst_q_value(P("x^2 + q*s"), QSubst::one) == P("x^2 + s"));
    CHECK(subst_q_value(P("q^2*s + q^-1"), QSubst::inverse) == P("q^-2*s + q"));
    CHECK(subst_q_value(MPoly::x(), QSubst::inverse) == MPoly::x());

    auto rng = make_rng(13);
    for (int i = 0; i < 200; ++i) {
        const MPoly a = random_poly(rng);
        CHECK(subst_q_value(subst_q_value(a, QSubst::inverse), QSubst::inverse) == a);
    }
}

TEST_CASE("eval_rational") {
    CHECK(eval_rational(P("x^2 + q*s"), 2, 1, 1) == 5);
    CHECK(eval_rational(P("q*s^-1"), 0, 2, 3) == mpq_class(3, 2));
    CHECK_THROWS_AS(eval_rational(P("q*s^-1"), 0, 0, 1), PoleAtZeroError);
    CHECK(eval_rational(MPoly::zero(), 1, 1, 1) == 0);

    auto rng = make_rng(14);
    for (int i = 0; i < 200; ++i) {
        const MPoly a = random_poly(rng);
        const MPoly b = random_poly(rng);
        const mpq_class x0 = random_rational(rng);
        const mpq_class s0 = random_nonzero_rational(rng);
        const mpq_class q0 = random_nonzero_rational(rng);
        CHECK(eval_rational(a + b, x0, s0, q0) ==
              eval_rational(a, x0, s0, q0) + eval_rational(b, x0, s0, q0));
        CHECK(eval_rational(a * b, x0, s0, q0) ==
              eval_rational(a, x0, s0, q0) * eval_rational(b, x0, s0, q0));
    }
}

TEST_CASE("canonical text") {
    CHECK(to_canonical_text(P("x^2 + q*s")) == "x^2 + q*s");
    CHECK(to_canonical_text(MPoly::zero()) == "0");
    CHECK(to_canonical_text(-(MPoly::q() * MPoly::s())) == "-q*s");
    CHECK(to_canonical_text(MPoly::s(-1)) == "s^-1");
    CHECK(to_canonical_text(MPoly(-7)) == "-7");
    // display order: x-degree descending, then s, q ascending
    MPoly f5 = P("q^4*s^2") + P("x^4") + P("q^2*s*x^2") + P("q*s*x^2") + P("q^3*s*x^2");
    CHECK(to_canonical_text(f5) == "x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2");
}

TEST_CASE("text round-trip is the identity on canonical forms") {
    auto rng = make_rng(15);
    for (int i = 0; i < 300; ++i) {
        const MPoly a = random_poly(rng);
        CHECK(parse_canonical_text(to_canonical_text(a)) == a);
    }
    CHECK_THROWS_AS(parse_canonical_text("x +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_canonical_text("y^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_canonical_text(""), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    auto rng = make_rng(16);
    for (int i = 0; i < 300; ++i) {
        const MPoly a = random_poly(rng);
        const MPoly b = random_poly(rng);
        const MPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + MPoly::zero() == a);
        CHECK(a * MPoly::one() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("parallel product equals the serial reference") {
    auto rng = make_rng(17);
    for (int i = 0; i < 20; ++i) {
        MPoly a, b;
        for (int t = 0; t < 40; ++t) {
            a += random_poly(rng, 4);
            b += random_poly(rng, 4);
        }
        for (int workers : {2, 3, 4}) {
            CHECK(mul_parallel(a, b, workers) == mul_serial(a, b));
        }
    }
}

TEST_CASE("monomial order is a strict total order compatible with products") {
    auto rng = make_rng(18);
    std::uniform_int_distribution<int> e(-4, 4);
    std::uniform_int_distribution<int> xe(0, 4);
    auto rand_mono = [&] { return Monomial{xe(rng), e(rng), e(rng)}; };
    for (int i = 0; i < 500; ++i) {
        const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
        const bool lt = graded_lex_less(a, b), gt = graded_lex_less(b, a);
        CHECK((lt && gt) == false);
        CHECK((lt || gt || a == b));
        if (lt) CHECK(graded_lex_less(a.times(c), b.times(c)));
    }
}
