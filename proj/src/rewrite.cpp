#include "tckit/bordism.hpp"
#include "tckit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace tckit {

RewriteOptions default_rewrite_options()
{
    RewriteOptions o;
    if (const char* env = std::getenv("TCKIT_REWRITE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            o.budget = static_cast<std::size_t>(v);
    }
    return o;
}

namespace {

struct Move {
    std::string forward, backward; // labels of S -> S' and of S' -> S
    LayerList state;
};

ObjectWord concat(const ObjectWord& a, const ObjectWord& b)
{
    ObjectWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

const Path& layer_source(const Signature& sig, const Layer& l)
{
    const auto& g = sig.two_cells()[l.gen];
    return l.inverse ? g.target : g.source;
}

const Path& layer_target(const Signature& sig, const Layer& l)
{
    const auto& g = sig.two_cells()[l.gen];
    return l.inverse ? g.source : g.target;
}

bool same_place(const Layer& a, const Layer& b) { return a.pos == b.pos && a.left == b.left && a.right == b.right; }

ObjectWord object_at(const Signature& sig, const Path& p, std::size_t pos)
{
    if (pos >= p.slices.size())
        return p.target;
    const Slice& s = p.slices[pos];
    return concat(concat(s.left, sig.one_cells()[s.gen].source), s.right);
}

// Every whiskering (pads) under which layer (gen, inverse) applies at pos.
std::vector<Layer> placements(const Signature& sig, const Path& p, std::size_t pos, int gen, bool inverse)
{
    std::vector<Layer> out;
    Layer probe{pos, {}, {}, gen, inverse};
    const Path& src = layer_source(sig, probe);
    if (!src.slices.empty()) {
        if (pos + src.slices.size() > p.slices.size())
            return out;
        const Slice& have = p.slices[pos];
        const Slice& want = src.slices[0];
        if (have.gen != want.gen || have.left.size() < want.left.size() || have.right.size() < want.right.size())
            return out;
        probe.left.assign(have.left.begin(), have.left.end() - want.left.size());
        probe.right.assign(have.right.begin() + want.right.size(), have.right.end());
        if (apply_layer(sig, p, probe))
            out.push_back(probe);
        return out;
    }
    ObjectWord o = object_at(sig, p, pos);
    const ObjectWord& from = src.source;
    if (from.size() > o.size())
        return out;
    for (std::size_t i = 0; i + from.size() <= o.size(); ++i) {
        probe.left.assign(o.begin(), o.begin() + i);
        probe.right.assign(o.begin() + i + from.size(), o.end());
        if (apply_layer(sig, p, probe))
            out.push_back(probe);
    }
    return out;
}

LayerList with_pair(const LayerList& s, std::size_t at, const Layer& a, const Layer& b)
{
    LayerList r(s.begin(), s.begin() + at);
    r.push_back(a);
    r.push_back(b);
    r.insert(r.end(), s.begin() + at, s.end());
    return r;
}

LayerList without_pair(const LayerList& s, std::size_t i)
{
    LayerList r(s.begin(), s.begin() + i);
    r.insert(r.end(), s.begin() + i + 2, s.end());
    return r;
}

std::vector<Move> moves(const Signature& sig, const Path& source, const LayerList& s, const RewriteOptions& opt,
                        bool backward)
{
    std::vector<Move> out;
    const auto& G = sig.two_cells();
    auto name = [&](int g) { return G[g].name; };
    std::string at;

    std::vector<Path> paths{source};
    for (const auto& l : s)
        paths.push_back(*apply_layer(sig, paths.back(), l));

    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const Layer& A = s[i];
        const Layer& B = s[i + 1];
        at = " at " + std::to_string(i);
        if (opt.interchange) {
            std::size_t sA = layer_source(sig, A).slices.size(), tA = layer_target(sig, A).slices.size();
            std::size_t sB = layer_source(sig, B).slices.size(), tB = layer_target(sig, B).slices.size();
            if (B.pos >= A.pos + tA) {
                LayerList r = s;
                r[i] = B;
                r[i].pos = B.pos - tA + sA;
                r[i + 1] = A;
                out.push_back({"interchange" + at, "interchange" + at, r});
            }
            if (B.pos + sB <= A.pos) {
                LayerList r = s;
                r[i] = B;
                r[i + 1] = A;
                r[i + 1].pos = A.pos - sB + tB;
                out.push_back({"interchange" + at, "interchange" + at, r});
            }
        }
        if (A.inverse || B.inverse) {
            if (opt.inverses && A.gen == B.gen && A.inverse != B.inverse && same_place(A, B) && sig.invertible(A.gen))
                out.push_back({"cancel inverse " + name(A.gen) + at, "insert inverse pair " + name(A.gen) + at,
                               without_pair(s, i)});
            continue;
        }
        if (opt.zigzags && A.left == B.left && A.right == B.right)
            for (const auto& adj : sig.adjunctions()) {
                if (A.gen != adj.unit || B.gen != adj.counit)
                    continue;
                std::string z;
                if (A.pos == B.pos + 1)
                    z = "zigzag " + name(adj.unit) + ";" + name(adj.counit) + " on " + sig.one_cells()[adj.right].name;
                else if (B.pos == A.pos + 1)
                    z = "zigzag " + name(adj.unit) + ";" + name(adj.counit) + " on " + sig.one_cells()[adj.left].name;
                else
                    continue;
                out.push_back({"cancel " + z + at, "insert " + z + at, without_pair(s, i)});
            }
        if (opt.counits && !backward && same_place(A, B))
            for (const auto& ca : sig.cell_adjunctions())
                if (A.gen == ca.right && B.gen == ca.left)
                    out.push_back({"counit " + name(ca.left) + " -| " + name(ca.right) + at, "", without_pair(s, i)});
    }

    for (std::size_t k = 0; k <= s.size(); ++k) {
        const Path& P = paths[k];
        at = " at " + std::to_string(k);
        if (opt.zigzags)
            for (const auto& adj : sig.adjunctions())
                for (std::size_t p = 0; p < P.slices.size(); ++p) {
                    const Slice& sl = P.slices[p];
                    for (bool g : {true, false}) {
                        if (sl.gen != (g ? adj.right : adj.left))
                            continue;
                        Layer u{g ? p + 1 : p, sl.left, sl.right, adj.unit, false};
                        Layer e{g ? p : p + 1, sl.left, sl.right, adj.counit, false};
                        std::string z = "zigzag " + name(adj.unit) + ";" + name(adj.counit) + " on " +
                                        sig.one_cells()[sl.gen].name;
                        out.push_back({"insert " + z + at, "cancel " + z + at, with_pair(s, k, u, e)});
                    }
                }
        if (opt.inverses)
            for (int g = 0; g < static_cast<int>(G.size()); ++g) {
                if (!sig.invertible(g))
                    continue;
                for (bool inv : {false, true})
                    for (std::size_t p = 0; p <= P.slices.size(); ++p)
                        for (Layer a : placements(sig, P, p, g, inv)) {
                            Layer b = a;
                            b.inverse = !inv;
                            out.push_back({"insert inverse pair " + name(g) + at, "cancel inverse " + name(g) + at,
                                           with_pair(s, k, a, b)});
                        }
            }
        if (opt.counits && backward)
            for (const auto& ca : sig.cell_adjunctions())
                for (std::size_t p = 0; p <= P.slices.size(); ++p)
                    for (Layer r : placements(sig, P, p, ca.right, false)) {
                        Layer l = r;
                        l.gen = ca.left;
                        out.push_back({"", "counit " + name(ca.left) + " -| " + name(ca.right) + at,
                                       with_pair(s, k, r, l)});
                    }
    }
    return out;
}

std::string key_of(const LayerList& s)
{
    std::string k = "#";
    auto put = [&](long v) {
        k += std::to_string(v);
        k += ',';
    };
    for (const auto& l : s) {
        put(static_cast<long>(l.pos));
        put(l.gen);
        put(l.inverse);
        for (int x : l.left)
            put(x);
        k += '|';
        for (int x : l.right)
            put(x);
        k += ';';
    }
    return k;
}

struct Visit {
    LayerList state;
    std::string parent;
    std::string label; // forward label of the edge between this state and its parent
    std::size_t depth = 0;
};

using Entry = std::tuple<std::size_t, std::size_t, std::string>;

} // namespace

std::vector<TraceStep> forward_moves(const Signature& sig, const Path& source, const LayerList& state,
                                     const RewriteOptions& opt)
{
    std::vector<TraceStep> r;
    for (auto& m : moves(sig, source, state, opt, false))
        r.push_back(TraceStep{m.forward, std::move(m.state)});
    return r;
}

RewriteResult rewrite_check(const Signature& sig, const Cell2& lhs, const Cell2& rhs, const RewriteOptions& opt)
{
    if (!(lhs.source == rhs.source) || !(lhs.target == rhs.target))
        throw ValidationError("the two sides of the goal have different boundaries");
    if (!(typecheck(sig, lhs.source, lhs.layers) == lhs.target) || !(typecheck(sig, rhs.source, rhs.layers) == rhs.target))
        throw ValidationError("goal cell does not reach its declared target");

    const std::size_t cap = std::max(lhs.layers.size(), rhs.layers.size()) + 4;
    RewriteResult res;
    std::unordered_map<std::string, Visit> seen[2];
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue[2];
    std::unordered_map<std::string, bool> expanded[2];

    const std::string start[2] = {key_of(lhs.layers), key_of(rhs.layers)};
    seen[0][start[0]] = Visit{lhs.layers, "", "", 0};
    seen[1][start[1]] = Visit{rhs.layers, "", "", 0};
    queue[0].emplace(lhs.layers.size(), 0, start[0]);
    queue[1].emplace(rhs.layers.size(), 0, start[1]);

    std::string meet;
    if (start[0] == start[1])
        meet = start[0];
    int side = 0;
    while (meet.empty() && res.expansions < opt.budget && (!queue[0].empty() || !queue[1].empty())) {
        if (queue[side].empty())
            side ^= 1;
        auto [size, depth, key] = queue[side].top();
        queue[side].pop();
        if (expanded[side][key])
            continue;
        expanded[side][key] = true;
        ++res.expansions;
        LayerList cur = seen[side][key].state;
        for (auto& m : moves(sig, lhs.source, cur, opt, side == 1)) {
            if (m.state.size() > cap)
                continue;
            std::string k = key_of(m.state);
            if (seen[side].count(k))
                continue;
            const std::string& label = side == 0 ? m.forward : m.backward;
            seen[side][k] = Visit{m.state, key, label, depth + 1};
            if (seen[side ^ 1].count(k)) {
                meet = k;
                break;
            }
            queue[side].emplace(m.state.size(), depth + 1, k);
        }
        side ^= 1;
    }
    if (meet.empty()) {
        while (!queue[0].empty() && res.frontier.size() < 10) {
            res.frontier.push_back(seen[0][std::get<2>(queue[0].top())].state);
            queue[0].pop();
        }
        return res;
    }

    std::vector<TraceStep> head;
    for (std::string k = meet; !k.empty(); k = seen[0][k].parent)
        head.push_back(TraceStep{seen[0][k].label, seen[0][k].state});
    std::reverse(head.begin(), head.end());
    res.trace = head;
    for (std::string k = meet; !seen[1][k].parent.empty(); k = seen[1][k].parent) {
        const Visit& v = seen[1][k];
        res.trace.push_back(TraceStep{v.label, seen[1][v.parent].state});
    }
    res.success = true;
    return res;
}

bool replay_trace(const Signature& sig, const Cell2& lhs, const Cell2& rhs, const std::vector<TraceStep>& trace,
                  const RewriteOptions& opt, std::string* why)
{
    auto fail = [&](const std::string& m) {
        if (why)
            *why = m;
        return false;
    };
    if (trace.empty())
        return fail("empty trace");
    if (!(lhs.source == rhs.source) || !(lhs.target == rhs.target))
        return fail("the two sides have different boundaries");
    if (trace.front().state != lhs.layers)
        return fail("trace does not start at the left-hand side");
    if (trace.back().state != rhs.layers)
        return fail("trace does not end at the right-hand side");
    const Path& source = lhs.source;
    const Path& target = lhs.target;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        try {
            if (!(typecheck(sig, source, trace[i].state) == target))
                return fail("state " + std::to_string(i) + " has the wrong target");
        } catch (const ValidationError& e) {
            return fail("state " + std::to_string(i) + ": " + e.what());
        }
        if (i == 0)
            continue;
        bool found = false;
        for (const auto& m : forward_moves(sig, source, trace[i - 1].state, opt))
            if (m.rule == trace[i].rule && m.state == trace[i].state) {
                found = true;
                break;
            }
        if (!found)
            return fail("step " + std::to_string(i) + " (" + trace[i].rule + ") is not a rule application");
    }
    return true;
}

std::string trace_text(const Signature& sig, const std::vector<TraceStep>& trace)
{
    std::string t;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        t += i == 0 ? "start" : trace[i].rule;
        t += ": " + sig.layers_text(trace[i].state) + "\n";
    }
    return t;
}

// ------------------------------------------------------------ ambidexterity

namespace {

AmbidexterityReport run_ambidexterity(const Signature& sig, int unit, int counit, const Path& on_f, const Path& on_fR,
                                      const RewriteOptions& opt)
{
    AmbidexterityReport r;
    // fR -| f: unit produces [fR, f], counit consumes [f, fR].
    Cell2 z1{on_f, {Layer{1, {}, {}, unit, false}, Layer{0, {}, {}, counit, false}}, on_f};
    Cell2 z2{on_fR, {Layer{0, {}, {}, unit, false}, Layer{1, {}, {}, counit, false}}, on_fR};
    r.first = rewrite_check(sig, z1, identity_cell(on_f), opt);
    r.second = rewrite_check(sig, z2, identity_cell(on_fR), opt);
    r.ok = r.first.success && r.second.success &&
           replay_trace(sig, z1, identity_cell(on_f), r.first.trace, opt) &&
           replay_trace(sig, z2, identity_cell(on_fR), r.second.trace, opt);
    return r;
}

} // namespace

AmbidexterityReport verify_ambidexterity(bool use_right_adjoints, const RewriteOptions& opt)
{
    Signature s;
    int X = s.add_object("X");
    int Y = s.add_object("Y");
    int f = s.add_one_cell("f", {X}, {Y});
    int fR = s.add_one_cell("fR", {Y}, {X});
    int u = s.add_two_cell("u", {X}, {X}, {}, {f, fR});
    int v = s.add_two_cell("v", {Y}, {Y}, {fR, f}, {});
    s.declare_adjunction(f, fR, u, v);
    int a = s.add_two_cell(use_right_adjoints ? "uR" : "uL", {X}, {X}, {f, fR}, {});
    int b = s.add_two_cell(use_right_adjoints ? "vR" : "vL", {Y}, {Y}, {}, {fR, f});
    if (use_right_adjoints) {
        s.declare_cell_adjunction(u, a);
        s.declare_cell_adjunction(v, b);
    } else {
        s.declare_cell_adjunction(a, u);
        s.declare_cell_adjunction(b, v);
    }
    Path on_f{{X}, {Y}, {Slice{{}, f, {}}}};
    Path on_fR{{Y}, {X}, {Slice{{}, fR, {}}}};
    return run_ambidexterity(s, b, a, on_f, on_fR, opt);
}

AmbidexterityReport verify_bordism_ambidexterity(const RewriteOptions& opt)
{
    const Signature& s = bordism_base_signature();
    int ev = *s.one_cell("ev");
    int evR = *s.one_cell("evR");
    const auto& E = s.one_cells()[ev];
    Path on_ev{E.source, E.target, {Slice{{}, ev, {}}}};
    Path on_evR{E.target, E.source, {Slice{{}, evR, {}}}};
    return run_ambidexterity(s, *s.two_cell("v2R"), *s.two_cell("u2R"), on_ev, on_evR, opt);
}

} // namespace tckit
