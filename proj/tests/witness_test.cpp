#include "doctest.h"

#include <random>

#include "ramsey/family.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/witness.hpp"

using namespace ramsey;

TEST_CASE("pyth_shift_witness on the worked examples") {
    WitnessReport w1 = pyth_shift_witness(Int(3), Int(4), Int(5), Int(2), Rational(2), 1);
    CHECK(w1.valid);
    CHECK(w1.integral);
    CHECK(w1.assignment.at(VarId("X")) == Rational(5));
    CHECK(w1.assignment.at(VarId("V")) == Rational(4));

    WitnessReport w2 = pyth_shift_witness(Int(3), Int(4), Int(5), Int(1), Rational(0), 1);
    CHECK(w2.valid);
    CHECK(w2.assignment.at(VarId("X")) == Rational(3));
    CHECK(w2.assignment.at(VarId("V")) == Rational(3));

    WitnessReport w3 = pyth_shift_witness(Int(6), Int(8), Int(10), Int(2), Rational(4), 2);
    CHECK(w3.valid);
    CHECK(w3.assignment.at(VarId("X")) == Rational(14));
    CHECK(w3.assignment.at(VarId("V")) == Rational(10));

    CHECK_THROWS_AS(pyth_shift_witness(Int(3), Int(4), Int(6), Int(2), Rational(2), 1), Error);
    // non-integral shift rejected in integral mode, fine in rational mode
    CHECK_THROWS_AS(pyth_shift_witness(Int(3), Int(4), Int(5), Int(1), Rational(1), 1,
                                       WitnessMode::RequireIntegral),
                    Error);
    CHECK(pyth_shift_witness(Int(3), Int(4), Int(5), Int(1), Rational(1), 1).valid);
}

TEST_CASE("pyth_shift residual reduces to the triple relation before using it") {
    // construction stays valid across every triple simultaneously: substitute
    // symbolically and reduce by x^2 + y^2 - z^2
    Polynomial x = Polynomial::var(VarId("x"));
    Polynomial y = Polynomial::var(VarId("y"));
    Polynomial z = Polynomial::var(VarId("z"));
    Polynomial c = Polynomial::var(VarId("c"));
    Polynomial u = Polynomial::var(VarId("u"));
    for (unsigned n : {1u, 2u, 4u}) {
        Polynomial cun = c * u.pow(n);
        Polynomial substituted = (x + Rational(1, 2) * cun).pow(2) + y.pow(2) - z.pow(2) -
                                 cun * (x + Rational(1, 4) * cun);
        CHECK(substituted == x.pow(2) + y.pow(2) - z.pow(2));
    }
}

TEST_CASE("pyth_pm_witness on the worked examples") {
    WitnessReport plus = pyth_pm_witness(Int(3), Int(4), Int(5), Int(2), Rational(2), PmSign::Plus);
    CHECK(plus.valid);
    CHECK(plus.assignment.at(VarId("Y")) == Rational(6));
    CHECK(plus.assignment.at(VarId("Z")) == Rational(7));
    CHECK(plus.assignment.at(VarId("U")) == Rational(10));
    CHECK(plus.assignment.at(VarId("V")) == Rational(8));

    WitnessReport zero = pyth_pm_witness(Int(3), Int(4), Int(5), Int(2), Rational(0), PmSign::Plus);
    CHECK(zero.valid);
    CHECK(zero.assignment.at(VarId("Y")) == Rational(4));
    CHECK(zero.assignment.at(VarId("Z")) == Rational(5));

    WitnessReport minus = pyth_pm_witness(Int(5), Int(12), Int(13), Int(4), Rational(1), PmSign::Minus);
    CHECK(minus.valid);
    CHECK(minus.assignment.at(VarId("Y")) == Rational(10));
    CHECK(minus.assignment.at(VarId("Z")) == Rational(15));
    CHECK(minus.assignment.at(VarId("U")) == Rational(52));
    CHECK(minus.assignment.at(VarId("V")) == Rational(48));

    CHECK_THROWS_AS(pyth_pm_witness(Int(3), Int(4), Int(5), Int(2), Rational(8), PmSign::Minus), Error);
}

TEST_CASE("mn_witness on the worked examples") {
    WitnessReport w1 = mn_witness(Int(2), 1, 2, 1, Int(2), Int(2));
    CHECK(w1.valid);
    CHECK(w1.integral);
    CHECK(w1.assignment.at(VarId("X_1_1")) == Rational(2));
    CHECK(w1.assignment.at(VarId("X_3")) == Rational(4)); // Q = 1

    WitnessReport w2 = mn_witness(Int(2), 2, 3, 1, Int(4), Int(4));
    CHECK(w2.valid);
    CHECK(w2.assignment.at(VarId("X_1_1")) == Rational(2));
    CHECK(w2.assignment.at(VarId("X_4")) == Rational(72)); // Q = 17

    CHECK_THROWS_AS(mn_witness(Int(2), 1, 2, 1, Int(3), Int(2)), Error); // divisibility
    CHECK_THROWS_AS(mn_witness(Int(2), 1, 2, 2, Int(2), Int(2)), Error); // bad index
    // permissive mode accepts p^{mj} | (b + d)
    WitnessReport w3 = mn_witness(Int(2), 1, 2, 1, Int(3), Int(1), true);
    CHECK(w3.valid);
}

TEST_CASE("mn_witness residual is identically zero in (b, d)") {
    // symbolic route: residual of the construction as a polynomial identity
    for (long p : {2L, 3L}) {
        for (unsigned m : {1u, 2u, 3u}) {
            for (unsigned n : {2u, 3u, 5u}) {
                for (unsigned j = 1; j <= n - 1; ++j) {
                    Polynomial b = Polynomial::var(VarId("b"));
                    Polynomial d = Polynomial::var(VarId("d"));
                    Int pmj = int_pow(Int(p), static_cast<unsigned long>(m) * j);
                    Int q(1);
                    for (unsigned i = 1; i <= n - 1; ++i)
                        q += int_pow(Int(p), static_cast<unsigned long>(m) * i);
                    q -= pmj;
                    Polynomial residual;
                    for (unsigned i = 1; i <= n - 1; ++i) {
                        Rational coeff(int_pow(Int(p), static_cast<unsigned long>(m) * i));
                        Polynomial xi1 = (i == j)
                                             ? Rational(Int(1), pmj) * (b + d)
                                             : d;
                        residual = residual + Polynomial::constant(coeff) * xi1 * d.pow(m - 1);
                    }
                    residual = residual - d.pow(m - 1) * (b + Polynomial::constant(Rational(q)) * d);
                    CHECK(residual.is_zero());
                }
            }
        }
    }
}

TEST_CASE("ln_witness: upper index n-1 is exact, upper index n leaves a residual") {
    WitnessReport good = ln_witness(Int(2), Rational(2), 2, 1, Int(2), Int(2));
    CHECK(good.valid);
    CHECK(good.integral);
    CHECK(good.assignment.at(VarId("X_1")) == Rational(2));
    CHECK(good.assignment.at(VarId("X_4")) == Rational(3)); // Q = 2

    WitnessReport paper = ln_witness(Int(2), Rational(2), 2, 1, Int(2), Int(2), LnQIndex::UpperN);
    CHECK(!paper.valid);
    CHECK(!paper.residual.is_zero());

    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned j = 1; j <= n - 1; ++j) {
            Int b = int_pow(Int(2), j + 2);
            WitnessReport corrected =
                ln_witness(Int(2), Rational(4), n, j, b, Int(4), LnQIndex::UpperNMinus1);
            CHECK(corrected.valid);
            WitnessReport off = ln_witness(Int(2), Rational(4), n, j, b, Int(4), LnQIndex::UpperN);
            CHECK(!off.valid);
        }
    }

    CHECK_THROWS_AS(ln_witness(Int(2), Rational(2), 2, 1, Int(3), Int(2)), Error); // a^j | b fails
}

TEST_CASE("witnesses can be checked against a coloring") {
    Coloring c = Coloring::padic(Int(2), 2, 100);
    WitnessReport w = mn_witness(Int(2), 1, 2, 1, Int(2), Int(2), false, &c);
    CHECK(w.color_checked);
    // 2 X_1 = X_3 forces different ord_2 parity, so never monochromatic here
    CHECK(!w.mono_color.has_value());
}

TEST_CASE("scaling a triple scales the c=0 witnesses") {
    std::mt19937_64 rng(0x5ca1ab1eu);
    std::uniform_int_distribution<long> scale(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        long k = scale(rng);
        WitnessReport base = pyth_shift_witness(Int(3), Int(4), Int(5), Int(7), Rational(0), 2);
        WitnessReport scaled =
            pyth_shift_witness(Int(3 * k), Int(4 * k), Int(5 * k), Int(7), Rational(0), 2);
        CHECK(base.valid);
        CHECK(scaled.valid);
        CHECK(scaled.assignment.at(VarId("X")) == Rational(Int(3 * k)));
    }
}

TEST_CASE("moreira_check") {
    Coloring c = Coloring::padic(Int(2), 2, 100);
    std::vector<Polynomial> fs{Polynomial::var(VarId("y"))};
    MoreiraReport r1 = moreira_check(Int(1), Int(1), fs, c);
    CHECK(r1.values == std::vector<Int>{Int(1), Int(1), Int(2)});
    CHECK(r1.monochromatic == (c.color(1L) == c.color(2L)));

    MoreiraReport r2 = moreira_check(Int(2), Int(3), fs, c);
    CHECK(r2.values == std::vector<Int>{Int(2), Int(6), Int(5)});

    CHECK_THROWS_AS(moreira_check(Int(60), Int(2), fs, c), Error); // 120 outside [1,100]
}

TEST_CASE("witness json shape") {
    WitnessReport w = mn_witness(Int(2), 1, 2, 1, Int(2), Int(2));
    auto j = witness_to_json(w);
    CHECK(j["valid"] == true);
    CHECK(j["residual"] == "0");
    CHECK(j["assignment"]["X_1_1"] == "2");
}
