#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliffq/spacetime.hpp"
#include "support/oracles.hpp"

using cliffq::Boost;
using cliffq::Event;
using cliffq::Multivector;
using cliffq::Rational;
using cliffq::Rotor;
using cliffq::Signature;
using MV = Multivector<Rational>;
using Ev = Event<Rational>;

namespace {

const Signature st = cliffq::spacetime_signature();

Ev ev(Rational ct, Rational x, Rational y, Rational z) { return Ev{ct, x, y, z}; }

const std::array<std::array<Rational, 3>, 3> kPythagorean = {{
    {Rational(3, 5), Rational(0), Rational(0)},
    {Rational(5, 13), Rational(0), Rational(0)},
    {Rational(8, 17), Rational(0), Rational(0)},
}};

}  // namespace

TEST_CASE("interval") {
    Ev a = ev(5, 3, 0, 0), origin{};
    CHECK(interval_sq(a, a) == Rational(0));
    CHECK(interval_sq(a, origin) == Rational(16));
    CHECK(interval_sq(origin, a) == Rational(16));
    CHECK(interval_sq(ev(1, 1, 0, 0), origin) == Rational(0));
}

TEST_CASE("lightlike classification") {
    CHECK(is_lightlike(ev(1, 1, 0, 0)));
    CHECK_FALSE(is_lightlike(ev(1, 0, 0, 0)));
    CHECK(is_lightlike(ev(5, 3, 4, 0)));
}

TEST_CASE("boost construction") {
    auto b0 = Boost<Rational>::from_beta({Rational(0), Rational(0), Rational(0)});
    CHECK(b0.gamma == Rational(1));
    Ev p = ev(7, -2, Rational(1, 3), 4);
    CHECK(lorentz_transform(b0, p) == p);

    auto b35 = Boost<Rational>::from_beta({Rational(3, 5), Rational(0), Rational(0)});
    CHECK(b35.gamma == Rational(5, 4));

    CHECK_THROWS_AS(Boost<Rational>::from_beta({Rational(1), Rational(0), Rational(0)}),
                    cliffq::SuperluminalVelocityError);
    CHECK_THROWS_AS(Boost<Rational>::from_beta({Rational(7, 5), Rational(0), Rational(0)}),
                    cliffq::SuperluminalVelocityError);
    CHECK_THROWS_AS(Boost<Rational>::from_beta({Rational(1, 3), Rational(0), Rational(0)}),
                    cliffq::InexactError);

    // Approximate mode accepts any subluminal velocity.
    auto bd = Boost<double>::from_beta({1.0 / 3, 0, 0});
    CHECK(bd.gamma == doctest::Approx(1.0 / std::sqrt(8.0 / 9.0)));
}

TEST_CASE("the pinned transformation") {
    auto b = Boost<Rational>::from_beta({Rational(3, 5), Rational(0), Rational(0)});
    Ev p = ev(5, 3, 0, 0);
    Ev prime = lorentz_transform(b, p);
    CHECK(prime == ev(4, 0, 0, 0));
    CHECK(interval_sq(p, Ev{}) == Rational(16));
    CHECK(interval_sq(prime, Ev{}) == Rational(16));
}

TEST_CASE("transverse components pass through x-boosts") {
    auto b = Boost<Rational>::from_beta({Rational(5, 13), Rational(0), Rational(0)});
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        Ev p = ev(oracle::rand_rational(rng), oracle::rand_rational(rng),
                  oracle::rand_rational(rng), oracle::rand_rational(rng));
        Ev prime = lorentz_transform(b, p);
        CHECK(prime.y == p.y);
        CHECK(prime.z == p.z);
    }
}

TEST_CASE("sandwich equals the closed form on a grid of events") {
    std::vector<Rational> betas{Rational(0), Rational(3, 5), Rational(5, 13), Rational(8, 17)};
    for (const Rational& beta : betas) {
        auto b = Boost<Rational>::from_beta({beta, Rational(0), Rational(0)});
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                Ev p = ev(i, j, Rational(7, 3), Rational(-1, 2));
                Ev prime = lorentz_transform(b, p);
                auto want = oracle::closed_form_x_boost(beta, b.gamma, {p.ct, p.x, p.y, p.z});
                CHECK(prime.ct == want.ct);
                CHECK(prime.x == want.x);
                CHECK(prime.y == want.y);
                CHECK(prime.z == want.z);
            }
        }
    }
}

TEST_CASE("interval invariance for boosts in general directions") {
    // (9/25, 12/25, 0) has |beta|^2 = 9/25, still an exact gamma of 5/4.
    auto diag = Boost<Rational>::from_beta({Rational(9, 25), Rational(12, 25), Rational(0)});
    CHECK(diag.gamma == Rational(5, 4));
    std::mt19937_64 rng(73);
    std::vector<Boost<Rational>> boosts;
    boosts.push_back(diag);
    for (const auto& b : kPythagorean) boosts.push_back(Boost<Rational>::from_beta(b));
    for (const auto& b : boosts) {
        for (int t = 0; t < 25; ++t) {
            Ev p = ev(oracle::rand_rational(rng), oracle::rand_rational(rng),
                      oracle::rand_rational(rng), oracle::rand_rational(rng));
            CHECK(interval_sq(lorentz_transform(b, p), Ev{}) == interval_sq(p, Ev{}));
        }
    }
}

TEST_CASE("the lightcone is preserved") {
    auto b = Boost<Rational>::from_beta({Rational(3, 5), Rational(0), Rational(0)});
    for (Ev p : {ev(1, 1, 0, 0), ev(5, 3, 4, 0), ev(13, 3, 4, 12), ev(-5, 0, 3, 4)}) {
        REQUIRE(is_lightlike(p));
        CHECK(is_lightlike(lorentz_transform(b, p)));
    }
}

TEST_CASE("boosts along a line compose by velocity addition") {
    auto combine = [](const Rational& b1, const Rational& b2) {
        return (b1 + b2) / (Rational(1) + b1 * b2);
    };
    std::vector<std::pair<Rational, Rational>> pairs{
        {Rational(3, 5), Rational(5, 13)},
        {Rational(3, 5), Rational(3, 5)},
        {Rational(5, 13), Rational(8, 17)},
        {Rational(3, 5), Rational(-5, 13)},
    };
    for (const auto& [b1, b2] : pairs) {
        auto boost1 = Boost<Rational>::from_beta({b1, Rational(0), Rational(0)});
        auto boost2 = Boost<Rational>::from_beta({b2, Rational(0), Rational(0)});
        Rational b3 = combine(b1, b2);
        auto boost3 = Boost<Rational>::from_beta({b3, Rational(0), Rational(0)});

        Rotor<Rational> composed = compose(boost2.rotor, boost1.rotor);
        // Same action...
        for (int slot = 0; slot < 4; ++slot) {
            MV e = MV::generator(st, slot);
            CHECK(composed.apply(e) == boost3.rotor.apply(e));
        }
        // ...and proportional versors (rotor equality up to scale/sign).
        const MV& v1 = composed.versor();
        const MV& v2 = boost3.rotor.versor();
        Rational s1 = v1.coef(0), s2 = v2.coef(0);
        REQUIRE(s2 != Rational(0));
        CHECK(v1 * s2 == v2 * s1);
    }
}

TEST_CASE("a boost followed by its reverse is the identity") {
    for (const auto& beta : kPythagorean) {
        auto there = Boost<Rational>::from_beta(beta);
        auto back = Boost<Rational>::from_beta({-beta[0], -beta[1], -beta[2]});
        std::mt19937_64 rng(79);
        for (int t = 0; t < 10; ++t) {
            Ev p = ev(oracle::rand_rational(rng), oracle::rand_rational(rng),
                      oracle::rand_rational(rng), oracle::rand_rational(rng));
            CHECK(lorentz_transform(back, lorentz_transform(there, p)) == p);
        }
    }
}

TEST_CASE("poincare transform") {
    auto b = Boost<Rational>::from_beta({Rational(3, 5), Rational(0), Rational(0)});
    Ev offset = ev(1, 1, 1, 1);
    CHECK(poincare_transform(offset, b, ev(5, 3, 0, 0)) == ev(5, 1, 1, 1));

    auto b0 = Boost<Rational>::from_beta({Rational(0), Rational(0), Rational(0)});
    Ev p = ev(2, -3, 5, 7);
    CHECK(poincare_transform(Ev{}, b, p) == lorentz_transform(b, p));
    CHECK(poincare_transform(offset, b0, p) == p + offset);
}

TEST_CASE("spatial rotors embed into spacetime") {
    Signature cl03(0, 3);
    std::mt19937_64 rng(83);
    for (int t = 0; t < 25; ++t) {
        Rotor<Rational> spatial = oracle::rand_rotor3(cl03, rng);
        Rotor<Rational> embedded = cliffq::embed_spatial_rotor(spatial);
        MV v3 = oracle::rand_vector(cl03, rng);
        MV v4 = MV::vector(st, {Rational(0), v3.coef(0b001u), v3.coef(0b010u), v3.coef(0b100u)});
        MV rotated3 = spatial.apply(v3);
        MV rotated4 = embedded.apply(v4);
        CHECK(rotated4.coef(0b0001u) == Rational(0));
        CHECK(rotated4.coef(0b0010u) == rotated3.coef(0b001u));
        CHECK(rotated4.coef(0b0100u) == rotated3.coef(0b010u));
        CHECK(rotated4.coef(0b1000u) == rotated3.coef(0b100u));
        // Time direction untouched.
        CHECK(embedded.apply(MV::generator(st, 0)) == MV::generator(st, 0));
    }
}

TEST_CASE("event construction from time units") {
    Ev e = Ev::from_time(Rational(2), Rational(1), Rational(0), Rational(0), Rational(3));
    CHECK(e.ct == Rational(6));
    MV m = e.to_multivector();
    CHECK(Ev::from_multivector(m) == e);
    CHECK_THROWS_AS(Ev::from_multivector(MV::basis(st, 0b0011u)), std::invalid_argument);
}
