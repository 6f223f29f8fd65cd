#include <doctest.h>

#include "oracles.hpp"
#include "tckit/bordism.hpp"
#include "tckit/error.hpp"

using namespace tckit;

namespace {

Signature toy_signature()
{
    Signature s;
    int X = s.add_object("X");
    int f = s.add_one_cell("f", {X}, {X});
    int g = s.add_one_cell("g", {X}, {X});
    int a = s.add_two_cell("a", {X}, {X}, {f}, {g});
    s.add_two_cell("b", {X}, {X}, {g}, {f});
    s.declare_invertible(a);
    return s;
}

std::vector<Point2> rotate(const std::vector<Point2>& v)
{
    // Rotation with cos = 3/5, sin = 4/5.
    mpq_class c(3, 5), s(4, 5);
    std::vector<Point2> out;
    for (const auto& p : v)
        out.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
    return out;
}

std::vector<Point2> subdivide(const std::vector<Point2>& v, std::size_t every)
{
    std::vector<Point2> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(v[k]);
        if (k % every == 0) {
            const auto& b = v[(k + 1) % v.size()];
            out.push_back({(v[k].x + b.x) / 2, (v[k].y + b.y) / 2});
        }
    }
    return out;
}

} // namespace

TEST_SUITE("bordism") {

TEST_CASE("framing classes")
{
    CHECK(FramingClass::loop(2).value == -1);
    CHECK(FramingClass::loop(3).value == 1);
    CHECK(FramingClass::loop(2).stabilize(3) == FramingClass::loop(3));
    CHECK(FramingClass::loop(2).stabilize(2) == FramingClass::loop(2));
    CHECK_THROWS_AS(FramingClass::loop(3).stabilize(2), DomainError);
    CHECK_THROWS_AS(FramingClass::identity(1), DomainError);
    CHECK_THROWS_AS(framing_compose(FramingClass::loop(2), FramingClass::loop(3)), DomainError);
    auto l3 = FramingClass::loop(3);
    CHECK(framing_compose(l3, l3) == FramingClass::identity(3));
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            FramingClass x{2, a}, y{2, b};
            CHECK(framing_compose(x, y) == framing_compose(y, x));
            CHECK(framing_compose(x, FramingClass::identity(2)) == x);
            for (int m : {3, 4})
                CHECK(framing_compose(x, y).stabilize(m) == framing_compose(x.stabilize(m), y.stabilize(m)));
            CHECK(x.stabilize(3).stabilize(4) == x.stabilize(4));
        }
}

TEST_CASE("turning numbers")
{
    for (int k = 0; k < 4; ++k) {
        auto ccw = gen::curled_square(k, false);
        CHECK(turning_number(ccw) == k + 1);
        CHECK(turning_number(gen::curled_square(k, true)) == -(k + 1));
        CHECK(turning_number(ccw) == oracle::turning_by_angles(ccw));
    }
    CHECK(turning_number(gen::figure_eight()) == 0);
    auto closed = gen::curled_square(0, false);
    closed.push_back(closed.front());
    CHECK(turning_number(closed) == 1);
    CHECK_THROWS_AS(turning_number({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(turning_number({{0, 0}, {2, 0}, {1, 0}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(turning_number({{0, 0}, {1, 0}}), DomainError);
}

TEST_CASE("the circle family realizes -3 .. 3")
{
    auto fam = gen::circle_family();
    REQUIRE(fam.size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(circle_invariant(fam[i]) == i - 3);
}

TEST_CASE("turning number survives subdivision and rotation")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        auto v = gen::star_polygon(rng);
        long w = turning_number(v);
        CHECK(w == 1);
        CHECK(w == oracle::turning_by_angles(v));
        CHECK(turning_number(subdivide(v, 1 + t % 3)) == w);
        CHECK(turning_number(rotate(v)) == w);
        std::vector<Point2> rev(v.rbegin(), v.rend());
        CHECK(turning_number(rev) == -w);
        CHECK(circle_invariant({v, NormalSide::Right}) == -w);
    }
}

TEST_CASE("Serre and Radford words are well typed")
{
    const auto& S = bordism_signature();
    int P = *S.object("P+");
    Path s = serre_word(), si = inverse_serre_word();
    CHECK(s.source == ObjectWord{P});
    CHECK(s.target == ObjectWord{P});
    CHECK(si.source == ObjectWord{P});
    Cell2 R = radford_word();
    CHECK(S.path_text(R.source) == "evL");
    CHECK(S.path_text(R.target) == "evR");
    CHECK(typecheck(S, R.source, R.layers) == R.target);
    Cell2 Ri = radford_inverse_word();
    CHECK(Ri.source == R.target);
    CHECK(Ri.target == R.source);
    Cell2 C = radford_conjugated_word();
    CHECK(C.source == si);
    CHECK(C.target == s);
    CHECK(typecheck(S, C.source, C.layers) == C.target);
    // Printing round-trips through the parser.
    CHECK(parse_term(S.path_text(s)).path == s);
}

TEST_CASE("term errors")
{
    CHECK_THROWS_AS(parse_term("comp("), ParseError);
    CHECK_THROWS_AS(parse_term("nosuch"), ParseError);
    CHECK_THROWS_AS(parse_term("comp(ev, ev)"), ValidationError);
    CHECK_THROWS_AS(parse_term("inv(u1)"), ValidationError);
    CHECK_THROWS_AS(parse_term("comp(u1, u1)"), ValidationError);
    auto bad = radford_word();
    std::swap(bad.layers[0], bad.layers[1]);
    CHECK_THROWS_AS(typecheck(bordism_signature(), bad.source, bad.layers), ValidationError);
}

TEST_CASE("one zigzag cancels in one step")
{
    const auto& S = bordism_signature();
    auto t = parse_term("comp(side(u1, id(ev)), side(id(ev), v1))");
    REQUIRE(t.kind == TermKind::TwoCell);
    auto r = rewrite_check(S, t.cell, identity_cell(t.cell.source));
    CHECK(r.success);
    CHECK(r.trace.size() == 2);
    CHECK(replay_trace(S, t.cell, identity_cell(t.cell.source), r.trace, default_rewrite_options()));
    RewriteOptions off;
    off.zigzags = false;
    off.budget = 200;
    CHECK_FALSE(rewrite_check(S, t.cell, identity_cell(t.cell.source), off).success);
}

TEST_CASE("interchange and inverses on a toy signature")
{
    Signature T = toy_signature();
    auto lhs = parse_term("comp(side(a, id(f)), side(id(g), a))", T).cell;
    auto rhs = parse_term("comp(side(id(f), a), side(a, id(g)))", T).cell;
    auto r = rewrite_check(T, lhs, rhs);
    CHECK(r.success);
    CHECK(r.trace.size() == 2);
    CHECK(replay_trace(T, lhs, rhs, r.trace, default_rewrite_options()));

    auto loop = parse_term("comp(a, inv(a))", T).cell;
    CHECK(rewrite_check(T, loop, identity_cell(loop.source)).success);
    auto back = parse_term("comp(inv(a), a)", T).cell;
    CHECK(rewrite_check(T, back, identity_cell(back.source)).success);
    // b is not the inverse of a.
    auto ab = parse_term("comp(a, b)", T).cell;
    RewriteOptions small;
    small.budget = 500;
    CHECK_FALSE(rewrite_check(T, ab, identity_cell(ab.source), small).success);
}

TEST_CASE("Radford composites are identities")
{
    const auto& S = bordism_signature();
    auto R = radford_word(), Ri = radford_inverse_word();
    auto a = rewrite_check(S, vertical(R, Ri), identity_cell(R.source));
    REQUIRE(a.success);
    CHECK(replay_trace(S, vertical(R, Ri), identity_cell(R.source), a.trace, default_rewrite_options()));
    auto b = rewrite_check(S, vertical(Ri, R), identity_cell(R.target));
    REQUIRE(b.success);
    CHECK(replay_trace(S, vertical(Ri, R), identity_cell(R.target), b.trace, default_rewrite_options()));
    CHECK_FALSE(trace_text(S, a.trace).empty());
}

TEST_CASE("replay rejects tampered traces")
{
    const auto& S = bordism_signature();
    auto R = radford_word(), Ri = radford_inverse_word();
    auto res = rewrite_check(S, vertical(R, Ri), identity_cell(R.source));
    REQUIRE(res.success);
    REQUIRE(res.trace.size() > 2);
    auto opt = default_rewrite_options();
    auto lhs = vertical(R, Ri), rhs = identity_cell(R.source);
    CHECK(replay_trace(S, lhs, rhs, res.trace, opt));
    CHECK_FALSE(replay_trace(S, lhs, vertical(Ri, R), res.trace, opt));

    auto t1 = res.trace;
    std::swap(t1[1], t1[2]);
    std::string why;
    CHECK_FALSE(replay_trace(S, lhs, rhs, t1, opt, &why));
    CHECK_FALSE(why.empty());

    auto t2 = res.trace;
    t2[1].state[0].pos += 1;
    CHECK_FALSE(replay_trace(S, lhs, rhs, t2, opt));

    auto t3 = res.trace;
    t3.pop_back();
    CHECK_FALSE(replay_trace(S, lhs, rhs, t3, opt));

    auto t4 = res.trace;
    t4.erase(t4.begin() + 1);
    CHECK_FALSE(replay_trace(S, lhs, rhs, t4, opt));
}

TEST_CASE("budget exhaustion reports a frontier")
{
    const auto& S = bordism_signature();
    auto R = radford_word(), Ri = radford_inverse_word();
    RewriteOptions opt;
    opt.budget = 1;
    auto res = rewrite_check(S, vertical(R, Ri), identity_cell(R.source), opt);
    CHECK_FALSE(res.success);
    CHECK(res.expansions <= 2);
    CHECK_FALSE(res.frontier.empty());
    CHECK_THROWS_AS(rewrite_check(S, R, identity_cell(R.source)), ValidationError);
}

TEST_CASE("ambidexterity")
{
    for (bool right : {false, true}) {
        CAPTURE(right);
        auto a = verify_ambidexterity(right);
        CHECK(a.ok);
        CHECK(a.first.success);
        CHECK(a.second.success);
    }
    auto b = verify_bordism_ambidexterity();
    CHECK(b.ok);
    const auto& S = bordism_base_signature();
    CHECK(S.adjunctions().size() == 2);
    CHECK(bordism_signature().adjunctions().size() == 3);
}

}
