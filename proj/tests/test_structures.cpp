#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tckit/builtins.hpp"
#include "tckit/structures.hpp"

using namespace tckit;

namespace {

const char* const kCategories[] = {"trivial", "vec_z2", "vec_z2_semion", "vec_z3", "vec_z3@c3", "fibonacci", "ising", "rep_s3",
                                   "vec_g:z4:1", "vec_g:z2xz2"};

// "name@cN" selects the cyclotomic field of order N.
FSymbolTable load(const std::string& spec)
{
    auto at = spec.find("@c");
    if (at == std::string::npos)
        return builtin(spec);
    return builtin(spec.substr(0, at), FieldSpec::cyclotomic(std::stoul(spec.substr(at + 2))));
}

std::vector<Scalar> traces(const FSymbolTable& F)
{
    auto c = standard_choices(F);
    std::vector<Scalar> t;
    for (int i = 0; i < F.rank(); ++i)
        t.push_back(quantum_trace(F, c, i, Scalar::one(F.field())));
    return t;
}

// Pointed case: p is pivotal iff p_unit = 1 and p_i t_i is a ring character,
// enumerated over all root-of-unity vectors.
std::set<std::vector<Scalar>> pointed_pivotals(const FSymbolTable& F)
{
    auto roots = roots_of_unity(F.field());
    auto t = traces(F);
    int r = F.rank();
    std::set<std::vector<Scalar>> out;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        std::vector<Scalar> p(r), d(r);
        for (int i = 0; i < r; ++i) {
            p[i] = roots[idx[i]];
            d[i] = p[i] * t[i];
        }
        if (p[F.ring().unit()].is_one() && oracle::is_character(F, d))
            out.insert(p);
        int k = 0;
        while (k < r && ++idx[k] == roots.size())
            idx[k++] = 0;
        if (k == r)
            break;
    }
    return out;
}

bool multiplicative(const FSymbolTable& F, const std::vector<Scalar>& chi)
{
    const auto& R = F.ring();
    for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j)
            for (int k : R.products(i, j))
                if (chi[i] * chi[j] != chi[k])
                    return false;
    return true;
}

std::vector<Scalar> squared(const std::vector<Scalar>& p)
{
    std::vector<Scalar> q;
    for (const auto& x : p)
        q.push_back(x * x);
    return q;
}

} // namespace

TEST_SUITE("structures") {

TEST_CASE("multiplicative solver")
{
    auto Q = FieldSpec::rational();
    auto one = Scalar::one(Q);
    CHECK(solve_multiplicative(1, {{{2}, one}}, Q).size() == 2);
    CHECK(solve_multiplicative(1, {{{3}, one}}, Q).size() == 1);
    CHECK(solve_multiplicative(1, {{{3}, Scalar::one(FieldSpec::cyclotomic(3))}}, FieldSpec::cyclotomic(3)).size() == 3);
    CHECK(solve_multiplicative(1, {{{2}, Scalar::from_int(Q, 2)}}, Q).empty());
    CHECK(solve_multiplicative(1, {{{1}, one}, {{1}, Scalar::from_int(Q, 2)}}, Q).empty());
    CHECK(solve_multiplicative(1, {{{1}, Scalar::zero(Q)}}, Q).empty());
    CHECK_THROWS_AS(solve_multiplicative(2, {{{1, 1}, one}}, Q), DomainError);
    CHECK_THROWS_AS(solve_multiplicative(2, {{{1}, one}}, Q), DomainError);
    auto two = solve_multiplicative(2, {{{1, 1}, one}, {{2, 0}, one}}, Q);
    REQUIRE(two.size() == 2);
    for (const auto& x : two)
        CHECK((x[0] * x[1]).is_one());
}

TEST_CASE("multiplicative solver against enumeration over F_7")
{
    auto K = FieldSpec::prime(7);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> ex(-3, 3), cnt(1, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<MultiplicativeEquation> eqs;
        int m = cnt(rng);
        for (int k = 0; k < m; ++k)
            eqs.push_back({{ex(rng), ex(rng), ex(rng)}, gen::nonzero(K, rng)});
        std::set<std::vector<Scalar>> want;
        for (std::uint64_t a = 1; a < 7; ++a)
            for (std::uint64_t b = 1; b < 7; ++b)
                for (std::uint64_t c = 1; c < 7; ++c) {
                    std::vector<Scalar> x{Scalar::prime_element(K, a), Scalar::prime_element(K, b),
                                          Scalar::prime_element(K, c)};
                    bool ok = true;
                    for (const auto& eq : eqs) {
                        Scalar v = Scalar::one(K);
                        for (int i = 0; i < 3; ++i)
                            v *= x[i].pow(eq.exponents[i]);
                        ok = ok && v == eq.constant;
                    }
                    if (ok)
                        want.insert(x);
                }
        auto got = solve_multiplicative(3, eqs, K);
        CHECK(std::set<std::vector<Scalar>>(got.begin(), got.end()) == want);
        CHECK(got.size() == want.size());
    }
}

TEST_CASE("pivotal structure counts")
{
    CHECK(pivotal_solve(builtin("trivial")).size() == 1);
    CHECK(pivotal_solve(builtin("vec_z2")).size() == 2);
    CHECK(pivotal_solve(builtin("vec_z2_semion")).size() == 2);
    CHECK(pivotal_solve(builtin("fibonacci")).size() == 1);
    CHECK(pivotal_solve(builtin("ising")).size() == 2);
    CHECK(pivotal_solve(builtin("rep_s3")).size() == 1);
    CHECK(pivotal_solve(builtin("vec_z3", FieldSpec::cyclotomic(3))).size() == 3);
    CHECK(pivotal_solve(builtin("vec_z3", FieldSpec::rational())).size() == 1);
    CHECK(pivotal_solve(builtin("vec_g:z2xz2", FieldSpec::prime(5))).size() == 4);
    auto fib = pivotal_solve(builtin("fibonacci"));
    CHECK(fib[0].p[1].is_one());
}

TEST_CASE("pointed pivotals agree with character enumeration")
{
    for (const char* n : {"vec_z2", "vec_z2_semion", "vec_z3", "vec_z3@c3", "vec_g:z4:1", "vec_g:z2xz2", "vec_g:z3:2"}) {
        CAPTURE(n);
        auto F = load(n);
        std::set<std::vector<Scalar>> got;
        for (const auto& P : pivotal_solve(F))
            got.insert(P.p);
        CHECK(got == pointed_pivotals(F));
    }
}

TEST_CASE("pivotal structures form a torsor")
{
    for (const char* n : kCategories) {
        CAPTURE(n);
        auto F = load(n);
        auto g = double_dual_gauge(F);
        auto all = pivotal_solve(F);
        REQUIRE_FALSE(all.empty());
        for (const auto& P : all) {
            CHECK(pivotal_valid(F, g, P.p));
            CHECK(oracle::is_character(F, quantum_dimensions(F, P)));
        }
        for (const auto& P : all)
            for (const auto& Q : all) {
                std::vector<Scalar> chi;
                for (int i = 0; i < F.rank(); ++i)
                    chi.push_back(P.p[i] / Q.p[i]);
                CHECK(multiplicative(F, chi));
                // Twisting any pivotal by the ratio lands back in the set.
                std::vector<Scalar> twisted;
                for (int i = 0; i < F.rank(); ++i)
                    twisted.push_back(all[0].p[i] * chi[i]);
                CHECK(pivotal_valid(F, g, twisted));
            }
        // Doubling a non-unit entry breaks validity.
        if (F.rank() > 1) {
            auto bad = all[0].p;
            int i = F.ring().unit() == 0 ? 1 : 0;
            bad[i] = bad[i] * Scalar::from_int(F.field(), 2);
            CHECK_FALSE(pivotal_valid(F, g, bad));
        }
    }
}

TEST_CASE("sphericality")
{
    auto z3 = builtin("vec_z3", FieldSpec::cyclotomic(3));
    int spherical = 0;
    for (const auto& P : pivotal_solve(z3)) {
        auto d = quantum_dimensions(z3, P);
        bool want = d[1] == d[2];
        CHECK(spherical_check(z3, P) == want);
        spherical += want;
    }
    CHECK(spherical == 1);
    for (const char* n : {"vec_z2", "fibonacci", "ising", "rep_s3"}) {
        CAPTURE(n);
        auto F = load(n);
        for (const auto& P : pivotal_solve(F))
            CHECK(spherical_check(F, P));
    }
    auto fib = builtin("fibonacci");
    auto d = quantum_dimensions(fib, pivotal_solve(fib)[0]);
    CHECK(d[1] * d[1] == Scalar::one(fib.field()) + d[1]);
}

TEST_CASE("pivotal data under gauge")
{
    std::mt19937_64 rng(22);
    for (const char* n : {"vec_z3@c3", "fibonacci", "ising", "vec_z2_semion"}) {
        CAPTURE(n);
        auto F = load(n);
        std::multiset<std::vector<Scalar>> dims;
        for (const auto& P : pivotal_solve(F))
            dims.insert(quantum_dimensions(F, P));
        for (int t = 0; t < 5; ++t) {
            auto G = gauge_transform(F, gen::gauge(F, rng));
            std::multiset<std::vector<Scalar>> gd;
            for (const auto& P : pivotal_solve(G))
                gd.insert(quantum_dimensions(G, P));
            CHECK(gd == dims);
        }
    }
}

TEST_CASE("quadruple dual is trivializable")
{
    std::mt19937_64 rng(23);
    for (const char* n : kCategories) {
        CAPTURE(n);
        auto F = load(n);
        for (int t = 0; t < 4; ++t) {
            auto G = t == 0 ? F : gauge_transform(F, gen::gauge(F, rng));
            auto res = quadruple_dual_check(G);
            auto g = double_dual_gauge(G);
            REQUIRE(res.solvable);
            REQUIRE(res.witness.has_value());
            CHECK(quadruple_witness_valid(G, g, *res.witness));
            CHECK(res.distinguished_label == G.ring().unit());
            for (const auto& P : pivotal_solve(G))
                CHECK(quadruple_witness_valid(G, g, squared(P.p)));
            auto bad = *res.witness;
            if (G.rank() > 1) {
                bad[1] = bad[1] * Scalar::from_int(G.field(), 3);
                CHECK_FALSE(quadruple_witness_valid(G, g, bad));
            }
        }
    }
}

}
