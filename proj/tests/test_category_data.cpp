#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "tckit/builtins.hpp"
#include "tckit/duality.hpp"

using namespace tckit;

namespace {

FSymbolTable with_entry(const FSymbolTable& F, const Hexatuple& h, const Scalar& v)
{
    auto e = F.entries();
    e.at(h) = v;
    return FSymbolTable::create(F.ring(), F.field(), e);
}

} // namespace

TEST_SUITE("category_data") {

TEST_CASE("pentagon on built-ins agrees with the brute-force oracle")
{
    for (const char* n : {"trivial", "vec_z2", "vec_z2_semion", "vec_z3", "fibonacci", "ising", "rep_s3", "vec_g:z4:1",
                          "vec_g:z2xz2"}) {
        CAPTURE(n);
        auto F = builtin(n);
        auto rep = pentagon_check(F);
        CHECK(rep.ok);
        CHECK(rep.instances > 0);
        CHECK_FALSE(oracle::pentagon(F).has_value());
    }
}

TEST_CASE("negated Fibonacci entry fails at the oracle's first witness")
{
    auto F = builtin("fibonacci");
    Hexatuple h{1, 1, 1, 1, 0, 0};
    auto G = with_entry(F, h, -F.F(1, 1, 1, 1, 0, 0));
    auto rep = pentagon_check(G);
    REQUIRE_FALSE(rep.ok);
    auto w = oracle::pentagon(G);
    REQUIRE(w.has_value());
    CHECK(rep.witness == *w);
    REQUIRE(rep.lhs.has_value());
    CHECK(*rep.lhs != *rep.rhs);
    CHECK_FALSE(rep.describe(G.ring()).empty());
}

TEST_CASE("every single-entry perturbation of Fibonacci and Ising is caught")
{
    for (const char* n : {"fibonacci", "ising"}) {
        auto F = builtin(n);
        Scalar two = Scalar::from_int(F.field(), 2);
        int tried = 0;
        for (const auto& [h, v] : F.entries()) {
            if (h[0] == F.ring().unit() || h[1] == F.ring().unit() || h[2] == F.ring().unit())
                continue;
            CAPTURE(hexatuple_text(F.ring(), h));
            auto G = with_entry(F, h, v * two);
            CHECK_FALSE(pentagon_check(G).ok);
            ++tried;
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("table construction rejects bad data")
{
    auto F = builtin("fibonacci");
    auto e = F.entries();
    e.erase(Hexatuple{1, 1, 1, 1, 1, 1});
    try {
        FSymbolTable::create(F.ring(), F.field(), e);
        FAIL("missing entry accepted");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("(tau,tau,tau,tau;tau,tau)") != std::string::npos);
    }

    auto s = F.entries();
    Scalar one = Scalar::one(F.field());
    s.at({1, 1, 1, 1, 0, 0}) = one;
    s.at({1, 1, 1, 1, 0, 1}) = one;
    s.at({1, 1, 1, 1, 1, 0}) = one;
    s.at({1, 1, 1, 1, 1, 1}) = one;
    CHECK_THROWS_AS(FSymbolTable::create(F.ring(), F.field(), s), ValidationError);

    auto u = F.entries();
    u.at({0, 1, 1, 1, 1, 1}) = -one;
    CHECK_THROWS_AS(FSymbolTable::create(F.ring(), F.field(), u), ValidationError);

    auto x = F.entries();
    x[{0, 0, 0, 1, 0, 0}] = one;
    CHECK_THROWS_AS(FSymbolTable::create(F.ring(), F.field(), x), ValidationError);

    auto w = F.entries();
    w.at({1, 1, 1, 1, 0, 0}) = Scalar::one(FieldSpec::rational());
    CHECK_THROWS_AS(FSymbolTable::create(F.ring(), F.field(), w), ValidationError);
}

TEST_CASE("gauge transformations")
{
    auto F = builtin("fibonacci");
    CHECK(gauge_transform(F, {}) == F);

    auto Z = builtin("vec_z2");
    GaugeTable u{{Triple{1, 1, 0}, Scalar::from_int(Z.field(), -1)}};
    auto Zg = gauge_transform(Z, u);
    CHECK(pentagon_check(Zg).ok);

    CHECK_THROWS_AS(gauge_transform(F, {{Triple{1, 1, 1}, Scalar::zero(F.field())}}), DomainError);
    CHECK_THROWS_AS(gauge_transform(F, {{Triple{0, 1, 1}, Scalar::from_int(F.field(), 2)}}), DomainError);

    std::mt19937_64 rng(77);
    Scalar d = global_dimension(F);
    for (int t = 0; t < 20; ++t) {
        auto g = gen::gauge(F, rng);
        auto G = gauge_transform(F, g);
        CHECK(pentagon_check(G).ok);
        CHECK(global_dimension(G) == d);
        CHECK(gauge_transform(G, inverse_gauge(g)) == F);
    }
    // Failure is gauge invariant too.
    auto bad = with_entry(F, {1, 1, 1, 1, 1, 1}, F.F(1, 1, 1, 1, 1, 1) * Scalar::from_int(F.field(), 3));
    for (int t = 0; t < 5; ++t)
        CHECK_FALSE(pentagon_check(gauge_transform(bad, gen::gauge(bad, rng))).ok);
}

TEST_CASE("pentagon on rank 6 is fast")
{
    for (const char* n : {"vec_g:z6:1", "vec_g:z3xz2"}) {
        auto start = std::chrono::steady_clock::now();
        auto F = builtin(n);
        auto rep = pentagon_check(F);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CHECK(rep.ok);
        CHECK(F.rank() == 6);
        CHECK(s < 5.0);
    }
}

}
