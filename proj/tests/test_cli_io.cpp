#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "oracles.hpp"
#include "tckit/builtins.hpp"
#include "tckit/io.hpp"

using namespace tckit;
using nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content)
    {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("tckit_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

json fib_json() { return category_to_json(builtin("fibonacci"), "fibonacci"); }

} // namespace

TEST_SUITE("cli_io") {

TEST_CASE("scalar encoding round-trips")
{
    std::mt19937_64 rng(51);
    for (auto f : {FieldSpec::rational(), FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(8), FieldSpec::cyclotomic(12),
                   FieldSpec::prime(7)})
        for (int t = 0; t < 50; ++t) {
            Scalar s = gen::element(f, rng);
            json j = json::parse(scalar_to_json(s).dump());
            CHECK(scalar_from_json(j, f) == s);
        }
    auto Q = FieldSpec::rational();
    CHECK(scalar_to_json(Scalar::from_rational(Q, mpq_class(-1, 2))) == json("-1/2"));
    CHECK(scalar_from_json(json("6/4"), Q) == Scalar::from_rational(Q, mpq_class(3, 2)));
    CHECK(scalar_from_json(json(-3), FieldSpec::prime(5)) == Scalar::from_int(FieldSpec::prime(5), 2));
    for (const char* bad : {"1/x", "1/0", "", "--1", "1.5"})
        CHECK_THROWS_AS(scalar_from_json(json(bad), Q), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json{{"zeta", 5}, {"coeffs", {"1"}}}, FieldSpec::cyclotomic(8)), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json{{"mod", 7}, {"val", 9}}, FieldSpec::prime(7)), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json{{"mod", 5}, {"val", 1}}, FieldSpec::prime(7)), ParseError);
    CHECK_THROWS_AS(scalar_from_json(json::array(), Q), ParseError);
}

TEST_CASE("category export and load round-trip")
{
    for (const auto& info : builtin_list()) {
        if (info.name.find('<') != std::string::npos)
            continue;
        CAPTURE(info.name);
        auto F = builtin(info.name);
        json j = category_to_json(F, info.name);
        CHECK(j["format"] == "tckit-category/1");
        CHECK(category_from_json(json::parse(j.dump())) == F);
        TempFile file(j.dump(2));
        CHECK(load_category(file.str()) == F);
    }
    auto P = builtin("vec_g:z3:1", FieldSpec::prime(7));
    CHECK(category_from_json(category_to_json(P, "p")) == P);

    auto r = run({"builtin", "export", "ising"});
    REQUIRE(r.code == 0);
    TempFile file(r.out);
    CHECK(load_category(file.str()) == builtin("ising"));
}

TEST_CASE("load errors are located")
{
    json j = fib_json();
    j["F"].erase(j["F"].size() - 1);
    try {
        category_from_json(j);
        FAIL("incomplete table accepted");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("missing F-entry (tau,tau,tau,tau;tau,tau)") != std::string::npos);
    }
    TempFile missing(j.dump());
    auto r = run({"validate", missing.str()});
    CHECK(r.code == 1);
    CHECK(r.err.find("(tau,tau,tau,tau;tau,tau)") != std::string::npos);

    json m = fib_json();
    m["F"][3]["value"] = "1/x";
    try {
        category_from_json(m);
        FAIL("malformed scalar accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("F[3].value", 0) == 0);
    }
    TempFile malformed(m.dump());
    CHECK(run({"validate", malformed.str()}).code == 2);

    json d = fib_json();
    d["F"].push_back(d["F"][0]);
    CHECK_THROWS_AS(category_from_json(d), ParseError);

    json p = fib_json();
    for (auto& e : p["F"])
        if (e["a"] == "tau" && e["b"] == "tau" && e["c"] == "tau" && e["e"] == "1" && e["f"] == "1")
            e["value"] = scalar_to_json(-scalar_from_json(e["value"], FieldSpec::cyclotomic(5)));
    CHECK_THROWS_AS(category_from_json(p), ValidationError);
    CHECK_NOTHROW(category_from_json(p, LoadOptions{false}));
    TempFile broken(p.dump());
    CHECK(run({"validate", broken.str()}).code == 1);
    CHECK(run({"fpdim", broken.str()}).code == 1);
    CHECK(run({"fpdim", broken.str(), "--skip-pentagon"}).code == 0);

    json u = fib_json();
    u["unit"] = "nope";
    CHECK_THROWS_AS(category_from_json(u), ParseError);
    json ring = fib_json();
    ring["fusion"].erase(ring["fusion"].size() - 1);
    CHECK_THROWS_AS(category_from_json(ring), ValidationError);

    CHECK_THROWS_AS(load_category("/nonexistent/tckit.json"), ParseError);
    TempFile garbage("{ not json");
    CHECK_THROWS_AS(load_category(garbage.str()), ParseError);
    CHECK(run({"gdim", garbage.str()}).code == 2);
}

TEST_CASE("category commands")
{
    auto g = run({"gdim", "--builtin", "fibonacci", "--json"});
    REQUIRE(g.code == 0);
    json gj = json::parse(g.out);
    CHECK(scalar_from_json(gj["value"], FieldSpec::cyclotomic(5)) == Scalar::cyclotomic(5, {3, 1, 0, 0, 1}));
    auto gh = run({"gdim", "--builtin", "fibonacci"});
    CHECK(gh.out.find("~ 3.618") != std::string::npos);

    auto s = run({"separable", "--builtin", "vec_z3", "--field", "prime:3"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("false", 0) == 0);
    auto s2 = run({"separable", "--builtin", "vec_z3", "--field", "prime:2", "--json"});
    CHECK(json::parse(s2.out)["separable"] == true);

    auto p = run({"pivotal", "--builtin", "vec_z2", "--json"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["pivotal_structures"].size() == 2);
    CHECK(run({"pivotal", "--builtin", "vec_z2"}).out.rfind("2 pivotal structures", 0) == 0);

    auto w = run({"window", "--builtin", "ising", "--json"});
    CHECK(scalar_from_json(json::parse(w.out)["value"], FieldSpec::cyclotomic(8)) ==
          Scalar::from_int(FieldSpec::cyclotomic(8), 4));
    auto q = run({"quaddual", "--builtin", "rep_s3", "--json"});
    CHECK(json::parse(q.out)["distinguished_label"] == "1");
    auto sp = run({"spherical", "--builtin", "vec_z3", "--field", "cyclotomic:3", "--json"});
    int spherical = 0;
    json spj = json::parse(sp.out);
    for (const auto& x : spj["pivotal_structures"])
        spherical += x["spherical"].get<bool>();
    CHECK(spherical == 1);
    CHECK(run({"frobenius-check", "--builtin", "fibonacci"}).code == 0);
    CHECK(run({"norms", "--builtin", "ising", "--json"}).code == 0);
    CHECK(run({"fpdim", "--builtin", "ising"}).code == 0);

    CHECK(run({"gdim", "--builtin", "fibonacci", "--field", "rational"}).code == 1);
    CHECK(run({"gdim", "--builtin", "fibonacci", "--field", "bogus"}).code == 2);
    CHECK(run({"gdim", "--builtin", "nosuch"}).code != 0);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"gdim"}).code == 2);
}

TEST_CASE("circle and bordism commands")
{
    TempFile eight("# figure eight\n0 0\n2 2\n2, 0\n0 2\n");
    auto r = run({"circle-invariant", eight.str(), "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["invariant"] == 0);
    TempFile square("0 0\n1 0\n1 1\n0 1\n");
    CHECK(json::parse(run({"circle-invariant", square.str(), "--side", "right", "--json"}).out)["invariant"] == -1);
    CHECK(json::parse(run({"circle-invariant", square.str(), "--json"}).out)["invariant"] == 1);
    CHECK(run({"circle-invariant", square.str(), "--side", "up"}).code == 2);
    TempFile degenerate("0 0\n1 0\n1 0\n0 1\n");
    CHECK(run({"circle-invariant", degenerate.str()}).code == 1);
    TempFile junk("0 0\n1\n");
    CHECK(run({"circle-invariant", junk.str()}).code == 2);
    CHECK_THROWS_AS(parse_polygon("0 0\n1 q\n"), ParseError);
    CHECK(parse_polygon("1/2 3\n# c\n\n4,5\n").size() == 2);

    TempFile zig("comp(side(u1, id(ev)), side(id(ev), v1)) = id(ev)\n");
    auto z = run({"bordism", "check", zig.str(), "--json"});
    REQUIRE(z.code == 0);
    json zj = json::parse(z.out);
    CHECK(zj["proved"] == true);
    CHECK(zj["replay"] == true);
    CHECK(zj["trace"].size() == 2);

    TempFile radford("comp(radford, radford_inv) = id(evL)\n");
    CHECK(json::parse(run({"bordism", "check", radford.str(), "--json"}).out)["proved"] == true);
    auto tight = run({"bordism", "check", radford.str(), "--json", "--budget", "1"});
    CHECK(tight.code == 1);
    CHECK(json::parse(tight.out)["proved"] == false);

    TempFile typed("radford\n");
    CHECK(run({"bordism", "check", typed.str()}).code == 0);
    TempFile syntax("comp(ev\n");
    CHECK(run({"bordism", "check", syntax.str()}).code == 2);
    TempFile illtyped("comp(ev, ev)\n");
    CHECK(run({"bordism", "check", illtyped.str()}).code == 1);
}

TEST_CASE("rewrite budget from the environment")
{
    ::setenv("TCKIT_REWRITE_BUDGET", "17", 1);
    CHECK(default_rewrite_options().budget == 17);
    ::setenv("TCKIT_REWRITE_BUDGET", "abc", 1);
    CHECK(default_rewrite_options().budget == 10000);
    ::unsetenv("TCKIT_REWRITE_BUDGET");
    CHECK(default_rewrite_options().budget == 10000);
}

TEST_CASE("the installed binary reports exit codes")
{
    std::string cli = TCKIT_CLI_PATH;
    CHECK(std::system((cli + " gdim --builtin trivial > /dev/null").c_str()) == 0);
    CHECK(WEXITSTATUS(std::system((cli + " nosuch 2> /dev/null").c_str())) == 2);
    CHECK(WEXITSTATUS(std::system((cli + " gdim --builtin fibonacci --field rational 2> /dev/null").c_str())) == 1);
}

}
