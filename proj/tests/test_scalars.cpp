#include <doctest.h>

#include "oracles.hpp"
#include "tckit/scalar.hpp"

using namespace tckit;

namespace {

Scalar cyc(std::uint64_t n, std::vector<long> raw)
{
    std::vector<mpq_class> q(raw.begin(), raw.end());
    return cyclotomic_reduce(q, n);
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("cyclotomic reduction")
{
    CHECK(cyc(4, {0, 0, 1}) == Scalar::from_int(FieldSpec::cyclotomic(4), -1));
    CHECK(cyc(3, {0, 0, 0, 1}) == Scalar::one(FieldSpec::cyclotomic(3)));
    CHECK(cyc(5, {1, 1, 1, 1, 1}).is_zero());
    // Raw input longer than n folds zeta^n = 1 first.
    CHECK(cyc(6, {0, 0, 0, 0, 0, 0, 0, 1}) == Scalar::zeta(FieldSpec::cyclotomic(6), 1));
    CHECK(cyc(1, {2, 3}) == Scalar::from_int(FieldSpec::cyclotomic(1), 5));
}

TEST_CASE("canonical forms are unique")
{
    std::mt19937_64 rng(11);
    for (std::uint64_t n : {5u, 8u, 12u, 15u}) {
        for (int t = 0; t < 40; ++t) {
            std::vector<mpq_class> raw(2 * n);
            for (auto& q : raw)
                q = gen::rational(rng, 4);
            Scalar a = cyclotomic_reduce(raw, n);
            // Same element written with an extra multiple of Phi_n.
            std::vector<mpq_class> shifted = raw;
            const auto& phi = cyclotomic_polynomial(n);
            mpq_class m = gen::rational(rng, 4);
            for (std::size_t k = 0; k < phi.size(); ++k)
                shifted[k + 1] += m * mpq_class(phi[k]);
            CHECK(cyclotomic_reduce(shifted, n) == a);
            auto z = oracle::embed(raw, n), w = a.approx();
            CHECK(std::abs(z - w) < 1e-9 * (1 + std::abs(z)));
        }
    }
}

TEST_CASE("inversion")
{
    CHECK(invert(Scalar::from_int(FieldSpec::rational(), 2)) == Scalar::from_rational(FieldSpec::rational(), mpq_class(1, 2)));
    auto c8 = FieldSpec::cyclotomic(8);
    CHECK(invert(Scalar::zeta(c8, 1)) == Scalar::zeta(c8, 7));
    CHECK(invert(Scalar::prime_element(FieldSpec::prime(5), 2)) == Scalar::prime_element(FieldSpec::prime(5), 3));
    CHECK_THROWS_AS(invert(Scalar::zero(c8)), DivisionByZero);
    CHECK_THROWS_AS(invert(Scalar::zero(FieldSpec::prime(7))), DivisionByZero);
}

TEST_CASE("conjugation")
{
    auto c5 = FieldSpec::cyclotomic(5);
    CHECK(conjugate(Scalar::zeta(c5, 1)) == Scalar::zeta(c5, 4));
    auto q = Scalar::from_rational(FieldSpec::rational(), mpq_class(7, 3));
    CHECK(conjugate(q) == q);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        Scalar a = gen::element(FieldSpec::cyclotomic(12), rng);
        Scalar b = gen::element(FieldSpec::cyclotomic(12), rng);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
        CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
        CHECK(std::abs(conjugate(a).approx() - std::conj(a.approx())) < 1e-9 * (1 + std::abs(a.approx())));
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(2024);
    for (auto f : {FieldSpec::rational(), FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(8), FieldSpec::cyclotomic(9),
                   FieldSpec::prime(7), FieldSpec::prime(1000003)}) {
        CAPTURE(f.to_string());
        for (int t = 0; t < 30; ++t) {
            Scalar a = gen::element(f, rng), b = gen::element(f, rng), c = gen::element(f, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Scalar::zero(f));
            if (!a.is_zero()) {
                CHECK(a * invert(a) == Scalar::one(f));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("embedding is multiplicative")
{
    std::mt19937_64 rng(8);
    for (std::uint64_t n : {5u, 7u, 8u, 20u})
        for (int t = 0; t < 20; ++t) {
            Scalar a = gen::element(FieldSpec::cyclotomic(n), rng), b = gen::element(FieldSpec::cyclotomic(n), rng);
            auto z = a.approx() * b.approx();
            CHECK(std::abs((a * b).approx() - z) < 1e-8 * (1 + std::abs(z)));
        }
}

TEST_CASE("mixing fields is rejected")
{
    CHECK_THROWS_AS(Scalar::one(FieldSpec::cyclotomic(5)) + Scalar::one(FieldSpec::cyclotomic(8)), FieldMismatch);
    CHECK_THROWS_AS(Scalar::one(FieldSpec::prime(3)) * Scalar::one(FieldSpec::rational()), FieldMismatch);
}

TEST_CASE("field specs")
{
    CHECK(FieldSpec::parse("cyclotomic:5") == FieldSpec::cyclotomic(5));
    CHECK(FieldSpec::parse("prime:7").characteristic() == 7);
    CHECK(FieldSpec::parse("rational").characteristic() == 0);
    CHECK_THROWS_AS(FieldSpec::parse("prime:8"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("cyclotomic:0"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("reals"), ParseError);
    CHECK_THROWS(FieldSpec::prime(9));
}

TEST_CASE("roots and roots of unity")
{
    CHECK(roots_of_unity(FieldSpec::rational()).size() == 2);
    CHECK(roots_of_unity(FieldSpec::cyclotomic(5)).size() == 10);
    CHECK(roots_of_unity(FieldSpec::cyclotomic(8)).size() == 8);
    CHECK(roots_of_unity(FieldSpec::prime(7)).size() == 6);

    auto Q = FieldSpec::rational();
    CHECK(nth_roots(Scalar::from_rational(Q, mpq_class(9, 4)), 2).size() == 2);
    CHECK(nth_roots(Scalar::from_int(Q, 2), 2).empty());
    CHECK(nth_roots(Scalar::from_int(Q, -8), 3) == std::vector<Scalar>{Scalar::from_int(Q, -2)});

    // sqrt 5 lives in Q(zeta5): (2 zeta + 2 zeta^4 + 1)^2 = 5.
    auto c5 = FieldSpec::cyclotomic(5);
    auto r5 = nth_roots(Scalar::from_int(c5, 5), 2);
    REQUIRE(r5.size() == 2);
    for (const auto& r : r5)
        CHECK(r * r == Scalar::from_int(c5, 5));
    // Every root returned is a root, and every root of unity of order 4 in Q(zeta8) is found.
    auto c8 = FieldSpec::cyclotomic(8);
    auto r4 = nth_roots(Scalar::one(c8), 4);
    CHECK(r4.size() == 4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 15; ++t) {
        Scalar y = gen::nonzero(c8, rng);
        for (unsigned n : {2u, 3u}) {
            auto roots = nth_roots(y.pow(n), n);
            CHECK(std::find(roots.begin(), roots.end(), y) != roots.end());
            for (const auto& r : roots)
                CHECK(r.pow(n) == y.pow(n));
        }
    }
    auto p = FieldSpec::prime(13);
    CHECK(nth_roots(Scalar::prime_element(p, 4), 2).size() == 2);
    CHECK(nth_roots(Scalar::prime_element(p, 2), 2).empty());
}

TEST_CASE("printing")
{
    CHECK(Scalar::from_rational(FieldSpec::rational(), mpq_class(-3, 6)).to_string() == "-1/2");
    CHECK(Scalar::prime_element(FieldSpec::prime(5), 3).to_string() == "3 (mod 5)");
    CHECK(Scalar::zeta(FieldSpec::cyclotomic(5), 1).to_string() == "ζ5");
}

}
