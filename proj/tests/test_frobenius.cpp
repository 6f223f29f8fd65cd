#include <doctest.h>

#include "oracles.hpp"
#include "tckit/builtins.hpp"
#include "tckit/frobenius.hpp"

using namespace tckit;

namespace {

const char* const kCategories[] = {"trivial", "vec_z2", "vec_z2_semion", "vec_z3", "fibonacci", "ising", "rep_s3",
                                   "vec_g:z4:1", "vec_g:z2xz2"};

} // namespace

TEST_SUITE("frobenius") {

TEST_CASE("Frobenius axioms hold on built-ins")
{
    for (const char* n : kCategories) {
        CAPTURE(n);
        auto F = builtin(n);
        auto A = build_frobenius(F);
        auto rep = frobenius_axioms_check(A);
        CHECK(rep.ok);
        CHECK(A.counit_unit.is_one());
        CHECK(A.counit_normalized);
        CHECK(A.factor.size() == static_cast<std::size_t>(F.rank()));
    }
}

TEST_CASE("a broken copairing is located")
{
    auto F = builtin("fibonacci");
    auto A = build_frobenius(F);
    A.factor[1].copairing.value = A.factor[1].copairing.value * Scalar::from_int(F.field(), 2);
    auto rep = frobenius_axioms_check(A);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failing_label.has_value());
    CHECK(*rep.failing_label == 1);
    CHECK_FALSE(rep.detail.empty());

    auto I = builtin("ising");
    auto B = build_frobenius(I);
    B.factor[2].copairing_dual.value = -B.factor[2].copairing_dual.value;
    auto r2 = frobenius_axioms_check(B);
    CHECK_FALSE(r2.ok);
    CHECK(r2.failing_label == 2);
}

TEST_CASE("window element equals the global dimension")
{
    std::mt19937_64 rng(31);
    for (const char* n : kCategories) {
        CAPTURE(n);
        auto F = builtin(n);
        Scalar want = oracle::closed_form_gdim(F);
        CHECK(window_element(build_frobenius(F)) == want);
        for (int t = 0; t < 3; ++t) {
            auto G = gauge_transform(F, gen::gauge(F, rng));
            CHECK(window_element(build_frobenius(G)) == want);
            std::vector<Scalar> s;
            for (int i = 0; i < G.rank(); ++i)
                s.push_back(gen::nonzero(G.field(), rng));
            auto A = build_frobenius(G, s);
            CHECK(frobenius_axioms_check(A).ok);
            CHECK(window_element(A) == want);
        }
    }
}

TEST_CASE("separability follows the characteristic")
{
    auto z3 = builtin("vec_z3", FieldSpec::prime(3));
    auto rep = separability_report(z3);
    CHECK_FALSE(rep.separable);
    CHECK(rep.dimension.is_zero());
    CHECK_FALSE(rep.note.empty());
    CHECK(separability_check(builtin("vec_z3", FieldSpec::prime(2))));
    CHECK(separability_check(builtin("vec_z3", FieldSpec::prime(7))));
    CHECK_FALSE(separability_check(builtin("vec_z2", FieldSpec::prime(2))));
    CHECK_FALSE(separability_check(builtin("vec_g:z5", FieldSpec::prime(5))));
    for (const char* n : kCategories)
        CHECK(separability_check(builtin(n)));
}

}
