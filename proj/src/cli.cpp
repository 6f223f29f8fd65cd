#include "tckit/io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "tckit/builtins.hpp"
#include "tckit/frobenius.hpp"
#include "tckit/structures.hpp"

namespace tckit {

using nlohmann::json;

namespace {

struct CategoryArgs {
    std::string builtin, file, field;
    bool json = false, skip_pentagon = false;
};

struct Loaded {
    FSymbolTable F;
    std::string name;
};

Loaded load(const CategoryArgs& a)
{
    if (a.builtin.empty() == a.file.empty())
        throw ParseError("give exactly one of --builtin or a category file");
    std::optional<FieldSpec> field;
    if (!a.field.empty())
        field = FieldSpec::parse(a.field);
    if (!a.builtin.empty())
        return {builtin(a.builtin, field), a.builtin};
    json j;
    try {
        j = json::parse(read_file(a.file));
    } catch (const json::parse_error& e) {
        throw ParseError(a.file + ": " + e.what());
    }
    if (field)
        j["field"] = field->to_string();
    std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : a.file;
    return {category_from_json(j, LoadOptions{!a.skip_pentagon}), name};
}

std::string approx_text(const Scalar& s)
{
    if (s.field().kind == FieldKind::Prime)
        return "";
    auto z = s.approx();
    std::ostringstream o;
    o << std::setprecision(12) << z.real();
    if (std::abs(z.imag()) > 1e-12)
        o << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return "  (~ " + o.str() + ")";
}

std::string show(const Scalar& s) { return s.to_string() + approx_text(s); }

json scalars_json(const std::vector<Scalar>& v)
{
    json a = json::array();
    for (const auto& s : v)
        a.push_back(scalar_to_json(s));
    return a;
}

int category_command(const std::string& cmd, const CategoryArgs& a, std::ostream& out)
{
    Loaded L = load(a);
    const FSymbolTable& F = L.F;
    const FusionRing& R = F.ring();
    json j{{"command", cmd}, {"category", L.name}, {"field", F.field().to_string()}};
    std::ostringstream h;
    int code = 0;

    if (cmd == "validate") {
        PentagonReport rep = pentagon_check(F);
        j["pentagon_instances"] = rep.instances;
        j["ok"] = rep.ok;
        h << L.name << ": valid (rank " << R.rank() << ", " << F.entries().size() << " F-entries, " << rep.instances
          << " pentagon instances)\n";
        if (!rep.ok)
            throw ValidationError(rep.describe(R));
    } else if (cmd == "gdim") {
        Scalar d = global_dimension(F);
        j["value"] = scalar_to_json(d);
        h << show(d) << "\n";
    } else if (cmd == "norms") {
        json n = json::object();
        for (int i = 0; i < R.rank(); ++i) {
            Scalar v = squared_norm(F, i);
            n[R.label(i)] = scalar_to_json(v);
            h << "||" << R.label(i) << "|| = " << show(v) << "\n";
        }
        j["norms"] = n;
    } else if (cmd == "fpdim") {
        json n = json::object();
        for (int i = 0; i < R.rank(); ++i) {
            double v = fp_dimension(R, i);
            n[R.label(i)] = v;
            h << "FPdim(" << R.label(i) << ") = " << std::setprecision(12) << v << "\n";
        }
        j["fpdim"] = n;
    } else if (cmd == "pivotal" || cmd == "spherical") {
        auto ps = pivotal_solve(F);
        json arr = json::array();
        h << ps.size() << " pivotal structure" << (ps.size() == 1 ? "" : "s") << "\n";
        for (const auto& P : ps) {
            json e{{"p", scalars_json(P.p)}};
            h << "  p = [";
            for (int i = 0; i < R.rank(); ++i)
                h << (i ? ", " : "") << R.label(i) << ": " << P.p[i];
            h << "]";
            if (cmd == "spherical") {
                auto d = quantum_dimensions(F, P);
                bool sph = spherical_check(F, P);
                e["dimensions"] = scalars_json(d);
                e["spherical"] = sph;
                h << "  d = [";
                for (int i = 0; i < R.rank(); ++i)
                    h << (i ? ", " : "") << d[i];
                h << "]  spherical: " << (sph ? "true" : "false");
            }
            h << "\n";
            arr.push_back(e);
        }
        j["pivotal_structures"] = arr;
    } else if (cmd == "quaddual") {
        auto q = quadruple_dual_check(F);
        j["solvable"] = q.solvable;
        h << "solvable: " << (q.solvable ? "true" : "false") << "\n";
        if (q.witness) {
            j["witness"] = scalars_json(*q.witness);
            j["distinguished_label"] = R.label(*q.distinguished_label);
            h << "  q = [";
            for (int i = 0; i < R.rank(); ++i)
                h << (i ? ", " : "") << R.label(i) << ": " << (*q.witness)[i];
            h << "]\n  distinguished label: " << R.label(*q.distinguished_label) << "\n";
        }
    } else if (cmd == "window") {
        Scalar w = window_element(build_frobenius(F));
        j["value"] = scalar_to_json(w);
        h << show(w) << "\n";
    } else if (cmd == "separable") {
        auto r = separability_report(F);
        j["separable"] = r.separable;
        j["dimension"] = scalar_to_json(r.dimension);
        j["note"] = r.note;
        h << (r.separable ? "true" : "false") << "\n  global dimension " << show(r.dimension) << "\n  " << r.note << "\n";
    } else if (cmd == "frobenius-check") {
        auto rep = frobenius_axioms_check(build_frobenius(F));
        j["ok"] = rep.ok;
        if (!rep.ok) {
            j["label"] = R.label(*rep.failing_label);
            j["detail"] = rep.detail;
            code = 1;
        }
        h << (rep.ok ? "pass" : "FAIL: " + rep.detail) << "\n";
    }
    out << (a.json ? j.dump() + "\n" : h.str());
    return code;
}

int circle_command(const std::string& file, const std::string& side, bool as_json, std::ostream& out)
{
    FramedImmersedCircle c{parse_polygon(read_file(file)), side == "right" ? NormalSide::Right : NormalSide::Left};
    long t = turning_number(c.vertices);
    long inv = circle_invariant(c);
    if (as_json)
        out << json{{"command", "circle-invariant"}, {"turning_number", t}, {"side", side}, {"invariant", inv}}.dump()
            << "\n";
    else
        out << inv << "\n  turning number " << t << ", normal side " << side << "\n";
    return 0;
}

std::string kind_text(TermKind k)
{
    return k == TermKind::Object ? "object" : k == TermKind::OneCell ? "1-cell" : "2-cell";
}

int bordism_command(const std::string& file, bool as_json, std::size_t budget, std::ostream& out)
{
    const Signature& sig = bordism_signature();
    std::string text = read_file(file);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    auto eq = text.find('=');
    if (eq == std::string::npos) {
        Term t = parse_term(text, sig);
        json j{{"command", "bordism check"}, {"kind", kind_text(t.kind)}};
        std::string src, tgt;
        if (t.kind == TermKind::Object) {
            src = tgt = sig.object_text(t.object);
        } else if (t.kind == TermKind::OneCell) {
            src = sig.object_text(t.path.source);
            tgt = sig.object_text(t.path.target);
        } else {
            src = sig.path_text(t.cell.source);
            tgt = sig.path_text(t.cell.target);
            j["layers"] = sig.layers_text(t.cell.layers);
        }
        j["source"] = src;
        j["target"] = tgt;
        if (as_json)
            out << j.dump() << "\n";
        else
            out << kind_text(t.kind) << ": " << src << " -> " << tgt << "\n";
        return 0;
    }
    Term lhs = parse_term(text.substr(0, eq), sig);
    Term rhs = parse_term(text.substr(eq + 1), sig);
    if (lhs.kind != TermKind::TwoCell && rhs.kind != TermKind::TwoCell)
        throw ValidationError("rewriting compares 2-cells; promote 1-cells with id(...)");
    auto cell = [](const Term& t) { return t.kind == TermKind::TwoCell ? t.cell : identity_cell(t.path); };
    RewriteOptions opt = default_rewrite_options();
    if (budget)
        opt.budget = budget;
    Cell2 a = cell(lhs), b = cell(rhs);
    RewriteResult r = rewrite_check(sig, a, b, opt);
    std::string why;
    bool replay = r.success && replay_trace(sig, a, b, r.trace, opt, &why);
    json j{{"command", "bordism check"}, {"proved", r.success && replay}, {"expansions", r.expansions}};
    if (r.success) {
        json steps = json::array();
        for (const auto& s : r.trace)
            steps.push_back({{"rule", s.rule}, {"state", sig.layers_text(s.state)}});
        j["trace"] = steps;
        j["replay"] = replay;
    } else {
        json fr = json::array();
        for (const auto& s : r.frontier)
            fr.push_back(sig.layers_text(s));
        j["frontier"] = fr;
    }
    if (as_json) {
        out << j.dump() << "\n";
    } else if (r.success) {
        out << trace_text(sig, r.trace) << "proved in " << r.trace.size() - 1 << " steps (" << r.expansions
            << " expansions), replay " << (replay ? "ok" : "FAILED: " + why) << "\n";
    } else {
        out << "no proof within " << opt.budget << " expansions; frontier:\n";
        for (const auto& s : r.frontier)
            out << "  " << sig.layers_text(s) << "\n";
    }
    return r.success && replay ? 0 : 1;
}

int builtin_command(const std::string& action, const std::string& name, const std::string& field, std::ostream& out)
{
    if (action == "list") {
        for (const auto& b : builtin_list())
            out << std::left << std::setw(22) << b.name << b.description << "\n";
        return 0;
    }
    if (action == "export") {
        if (name.empty())
            throw ParseError("builtin export needs a name");
        std::optional<FieldSpec> f;
        if (!field.empty())
            f = FieldSpec::parse(field);
        out << category_to_json(builtin(name, f), name).dump(2) << "\n";
        return 0;
    }
    throw ParseError("builtin expects 'list' or 'export <name>'");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with fusion categories and framed bordism words", "tckit"};
    app.require_subcommand(1);

    const char* category_cmds[][2] = {
        {"validate", "check ring axioms, F-table and pentagon"},
        {"gdim", "global dimension"},
        {"norms", "squared norm of every simple"},
        {"fpdim", "Frobenius-Perron dimensions (floating point)"},
        {"pivotal", "all pivotal structures"},
        {"spherical", "quantum dimensions and sphericality of each pivotal structure"},
        {"quaddual", "trivialization of the quadruple dual"},
        {"window", "window element of the representing Frobenius algebra"},
        {"separable", "separability via the global dimension"},
        {"frobenius-check", "zigzag and counit checks of the Frobenius structure"},
    };
    CategoryArgs cat;
    std::string selected;
    for (auto& c : category_cmds) {
        CLI::App* s = app.add_subcommand(c[0], c[1]);
        s->add_option("file,--file", cat.file, "category file (JSON)");
        s->add_option("--builtin", cat.builtin, "built-in category name");
        s->add_option("--field", cat.field, "field override: rational, cyclotomic:N, prime:P");
        s->add_flag("--json", cat.json, "machine-readable output");
        s->add_flag("--skip-pentagon", cat.skip_pentagon, "do not run the pentagon check on load");
        s->callback([&selected, name = std::string(c[0])] { selected = name; });
    }

    std::string polygon, side = "left";
    bool circle_json = false;
    CLI::App* circle = app.add_subcommand("circle-invariant", "2-framed circle invariant of a polygon");
    circle->add_option("file", polygon, "polygon file, one 'x y' vertex per line")->required();
    circle->add_option("--side", side, "normal side")->check(CLI::IsMember({"left", "right"}));
    circle->add_flag("--json", circle_json, "machine-readable output");

    std::string word_file;
    bool word_json = false;
    std::size_t budget = 0;
    CLI::App* bordism = app.add_subcommand("bordism", "bordism word calculus");
    bordism->require_subcommand(1);
    CLI::App* check = bordism->add_subcommand("check", "typecheck a word, or prove 'lhs = rhs' by rewriting");
    check->add_option("file", word_file, "word file")->required();
    check->add_flag("--json", word_json, "machine-readable output");
    check->add_option("--budget", budget, "search budget (default 10000 or TCKIT_REWRITE_BUDGET)");

    std::string action, bname, bfield;
    CLI::App* bi = app.add_subcommand("builtin", "list or export built-in categories");
    bi->add_option("action", action, "list | export")->required();
    bi->add_option("name", bname, "builtin name for export");
    bi->add_option("--field", bfield, "field override");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (!selected.empty())
            return category_command(selected, cat, out);
        if (circle->parsed())
            return circle_command(polygon, side, circle_json, out);
        if (check->parsed())
            return bordism_command(word_file, word_json, budget, out);
        if (bi->parsed())
            return builtin_command(action, bname, bfield, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace tckit
