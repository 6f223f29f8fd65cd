#include "tckit/bordism.hpp"
#include "tckit/error.hpp"

#include <cctype>

namespace tckit {

namespace {

ObjectWord concat(const ObjectWord& a, const ObjectWord& b)
{
    ObjectWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

ObjectWord slice_source(const Signature& sig, const Slice& s)
{
    return concat(concat(s.left, sig.one_cells()[s.gen].source), s.right);
}

ObjectWord slice_target(const Signature& sig, const Slice& s)
{
    return concat(concat(s.left, sig.one_cells()[s.gen].target), s.right);
}

ObjectWord object_at(const Signature& sig, const Path& p, std::size_t pos)
{
    return pos < p.slices.size() ? slice_source(sig, p.slices[pos]) : p.target;
}

void check_path(const Signature& sig, const Path& p, const std::string& what)
{
    ObjectWord cur = p.source;
    for (const auto& s : p.slices) {
        if (slice_source(sig, s) != cur)
            throw ValidationError(what + ": 1-cell " + sig.one_cells()[s.gen].name + " does not fit its source");
        cur = slice_target(sig, s);
    }
    if (cur != p.target)
        throw ValidationError(what + ": 1-cell does not end at its target");
}

} // namespace

// ---------------------------------------------------------------- signature

int Signature::add_object(const std::string& name)
{
    objects_.push_back(name);
    return static_cast<int>(objects_.size()) - 1;
}

int Signature::add_one_cell(const std::string& name, const ObjectWord& source, const ObjectWord& target)
{
    one_.push_back(OneCellGen{name, source, target});
    return static_cast<int>(one_.size()) - 1;
}

int Signature::add_two_cell(const std::string& name, const ObjectWord& from, const ObjectWord& to,
                            const std::vector<int>& source, const std::vector<int>& target)
{
    auto mk = [&](const std::vector<int>& gens) {
        Path p{from, to, {}};
        for (int g : gens)
            p.slices.push_back(Slice{{}, g, {}});
        check_path(*this, p, "2-cell generator " + name);
        return p;
    };
    two_.push_back(TwoCellGen{name, mk(source), mk(target)});
    return static_cast<int>(two_.size()) - 1;
}

void Signature::add_alias(const std::string& alias, const std::string& name) { alias_[alias] = name; }
void Signature::add_macro(const std::string& name, const std::string& text) { macro_[name] = text; }

void Signature::declare_adjunction(int left, int right, int unit, int counit)
{
    const auto& u = two_.at(unit);
    const auto& e = two_.at(counit);
    bool ok = u.source.slices.empty() && u.target.slices.size() == 2 && u.target.slices[0].gen == left &&
              u.target.slices[1].gen == right && e.target.slices.empty() && e.source.slices.size() == 2 &&
              e.source.slices[0].gen == right && e.source.slices[1].gen == left;
    if (!ok)
        throw ValidationError("unit/counit do not have the shape of an adjunction " + one_.at(left).name + " -| " +
                              one_.at(right).name);
    adj_.push_back(Adjunction{left, right, unit, counit});
}

void Signature::declare_cell_adjunction(int left, int right)
{
    const auto& l = two_.at(left);
    const auto& r = two_.at(right);
    if (!(l.source == r.target && l.target == r.source))
        throw ValidationError("cells " + l.name + " and " + r.name + " cannot be adjoint");
    cell_adj_.push_back(CellAdjunction{left, right});
}

void Signature::declare_invertible(int two_cell)
{
    two_.at(two_cell);
    invertible_.insert(two_cell);
}

std::string Signature::resolve(const std::string& name) const
{
    auto it = alias_.find(name);
    return it == alias_.end() ? name : it->second;
}

std::optional<int> Signature::object(const std::string& name) const
{
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Signature::one_cell(const std::string& name) const
{
    std::string n = resolve(name);
    for (std::size_t i = 0; i < one_.size(); ++i)
        if (one_[i].name == n)
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Signature::two_cell(const std::string& name) const
{
    std::string n = resolve(name);
    for (std::size_t i = 0; i < two_.size(); ++i)
        if (two_[i].name == n)
            return static_cast<int>(i);
    return std::nullopt;
}

const std::string* Signature::macro(const std::string& name) const
{
    auto it = macro_.find(name);
    return it == macro_.end() ? nullptr : &it->second;
}

std::string Signature::object_text(const ObjectWord& w) const
{
    if (w.empty())
        return "1";
    if (w.size() == 1)
        return objects_[w[0]];
    std::string s = "tensor(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + objects_[w[i]];
    return s + ")";
}

std::string Signature::path_text(const Path& p) const
{
    auto slice = [&](const Slice& s) {
        if (s.left.empty() && s.right.empty())
            return one_[s.gen].name;
        std::string t = "tensor(";
        if (!s.left.empty())
            t += "id(" + object_text(s.left) + "),";
        t += one_[s.gen].name;
        if (!s.right.empty())
            t += ",id(" + object_text(s.right) + ")";
        return t + ")";
    };
    if (p.slices.empty())
        return "id(" + object_text(p.source) + ")";
    if (p.slices.size() == 1)
        return slice(p.slices[0]);
    std::string t = "comp(";
    for (std::size_t i = 0; i < p.slices.size(); ++i)
        t += (i ? "," : "") + slice(p.slices[i]);
    return t + ")";
}

std::string Signature::layer_text(const Layer& l) const
{
    std::string t = l.inverse ? "inv(" + two_[l.gen].name + ")" : two_[l.gen].name;
    t += "@" + std::to_string(l.pos);
    if (!l.left.empty() || !l.right.empty())
        t += "[" + object_text(l.left) + "|" + object_text(l.right) + "]";
    return t;
}

std::string Signature::layers_text(const LayerList& ls) const
{
    if (ls.empty())
        return "id";
    std::string t;
    for (std::size_t i = 0; i < ls.size(); ++i)
        t += (i ? " ; " : "") + layer_text(ls[i]);
    return t;
}

namespace {

Signature make_bordism_signature(bool derived)
{
    Signature s;
    int P = s.add_object("P+");
    int M = s.add_object("P-");
    ObjectWord one{}, pm{P, M}, mp{M, P}, pp{P, P};
    int ev = s.add_one_cell("ev", pm, one);
    s.add_one_cell("coev", one, mp);
    int evL = s.add_one_cell("evL", one, pm);
    int evR = s.add_one_cell("evR", one, pm);
    s.add_one_cell("coevL", mp, one);
    s.add_one_cell("coevR", mp, one);
    s.add_one_cell("swap", pp, pp);

    int u1 = s.add_two_cell("u1", one, one, {}, {evL, ev});
    int v1 = s.add_two_cell("v1", pm, pm, {ev, evL}, {});
    int u2 = s.add_two_cell("u2", pm, pm, {}, {ev, evR});
    int v2 = s.add_two_cell("v2", one, one, {evR, ev}, {});
    int v2R = s.add_two_cell("v2R", one, one, {}, {evR, ev});
    int u2R = s.add_two_cell("u2R", pm, pm, {ev, evR}, {});
    s.add_alias("ut", "u1");
    s.add_alias("vt", "v1");

    s.declare_adjunction(evL, ev, u1, v1);
    s.declare_adjunction(ev, evR, u2, v2);
    if (derived)
        s.declare_adjunction(evR, ev, v2R, u2R);
    s.declare_cell_adjunction(v2, v2R);
    s.declare_cell_adjunction(u2, u2R);

    s.add_macro("serre", "comp(tensor(id(P+),evR),tensor(swap,id(P-)),tensor(id(P+),ev))");
    s.add_macro("serre_inv", "comp(tensor(id(P+),evL),tensor(swap,id(P-)),tensor(id(P+),ev))");
    s.add_macro("radford", "comp(side(id(evL),v2R),side(v1,id(evR)))");
    s.add_macro("radford_inv", "comp(side(id(evR),u1),side(u2R,id(evL)))");
    s.add_macro("radford_conj", "side(tensor(id(P+),ev),side(tensor(swap,id(P-)),tensor(id(P+),radford)))");
    return s;
}

} // namespace

const Signature& bordism_signature()
{
    static const Signature s = make_bordism_signature(true);
    return s;
}

const Signature& bordism_base_signature()
{
    static const Signature s = make_bordism_signature(false);
    return s;
}

// -------------------------------------------------------------- operations

Path identity_path(const ObjectWord& w) { return Path{w, w, {}}; }
Cell2 identity_cell(const Path& p) { return Cell2{p, {}, p}; }

Path compose_paths(const Path& a, const Path& b)
{
    if (a.target != b.source)
        throw ValidationError("1-cell composite: target of the first does not match source of the second");
    Path r{a.source, b.target, a.slices};
    r.slices.insert(r.slices.end(), b.slices.begin(), b.slices.end());
    return r;
}

Path tensor_paths(const Path& a, const Path& b)
{
    Path r{concat(a.source, b.source), concat(a.target, b.target), {}};
    for (auto s : a.slices) {
        s.right = concat(s.right, b.source);
        r.slices.push_back(std::move(s));
    }
    for (auto s : b.slices) {
        s.left = concat(a.target, s.left);
        r.slices.push_back(std::move(s));
    }
    return r;
}

Cell2 vertical(const Cell2& a, const Cell2& b)
{
    if (!(a.target == b.source))
        throw ValidationError("vertical composite: target 1-cell of the first does not match source of the second");
    Cell2 r{a.source, a.layers, b.target};
    r.layers.insert(r.layers.end(), b.layers.begin(), b.layers.end());
    return r;
}

Cell2 side(const Cell2& a, const Cell2& b)
{
    if (b.source.target != a.source.source)
        throw ValidationError("horizontal composite: objects do not match");
    Cell2 r{compose_paths(b.source, a.source), b.layers, compose_paths(b.target, a.target)};
    std::size_t shift = b.target.slices.size();
    for (auto l : a.layers) {
        l.pos += shift;
        r.layers.push_back(std::move(l));
    }
    return r;
}

Cell2 tensor_cells(const Cell2& a, const Cell2& b)
{
    Cell2 r{tensor_paths(a.source, b.source), {}, tensor_paths(a.target, b.target)};
    for (auto l : a.layers) {
        l.right = concat(l.right, b.source.source);
        r.layers.push_back(std::move(l));
    }
    std::size_t shift = a.target.slices.size();
    for (auto l : b.layers) {
        l.pos += shift;
        l.left = concat(a.source.target, l.left);
        r.layers.push_back(std::move(l));
    }
    return r;
}

std::optional<Path> apply_layer(const Signature& sig, const Path& p, const Layer& l)
{
    if (l.gen < 0 || l.gen >= static_cast<int>(sig.two_cells().size()))
        return std::nullopt;
    const TwoCellGen& g = sig.two_cells()[l.gen];
    const Path& src = l.inverse ? g.target : g.source;
    const Path& tgt = l.inverse ? g.source : g.target;
    if (l.pos + src.slices.size() > p.slices.size())
        return std::nullopt;
    if (object_at(sig, p, l.pos) != concat(concat(l.left, src.source), l.right))
        return std::nullopt;
    auto pad = [&](Slice s) {
        s.left = concat(l.left, s.left);
        s.right = concat(s.right, l.right);
        return s;
    };
    for (std::size_t k = 0; k < src.slices.size(); ++k)
        if (!(p.slices[l.pos + k] == pad(src.slices[k])))
            return std::nullopt;
    Path r{p.source, p.target, {}};
    r.slices.assign(p.slices.begin(), p.slices.begin() + l.pos);
    for (const auto& s : tgt.slices)
        r.slices.push_back(pad(s));
    r.slices.insert(r.slices.end(), p.slices.begin() + l.pos + src.slices.size(), p.slices.end());
    return r;
}

Path typecheck(const Signature& sig, const Path& source, const LayerList& layers)
{
    check_path(sig, source, "source");
    Path cur = source;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        auto next = apply_layer(sig, cur, layers[i]);
        if (!next)
            throw ValidationError("layer " + std::to_string(i) + " (" + sig.layer_text(layers[i]) +
                                  ") does not apply to " + sig.path_text(cur));
        cur = std::move(*next);
    }
    return cur;
}

// ------------------------------------------------------------------ parser

namespace {

struct Node {
    std::string head;
    std::vector<Node> args;
    bool call = false;
};

class Parser {
public:
    explicit Parser(const std::string& t) : t_(t) {}

    Node parse()
    {
        Node n = expr();
        skip();
        if (i_ != t_.size())
            fail("unexpected trailing input");
        return n;
    }

private:
    static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-'; }

    void skip()
    {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_])))
            ++i_;
    }

    [[noreturn]] void fail(const std::string& m) const
    {
        throw ParseError(m + " at offset " + std::to_string(i_));
    }

    Node expr()
    {
        skip();
        std::size_t b = i_;
        while (i_ < t_.size() && name_char(t_[i_]))
            ++i_;
        if (b == i_)
            fail("expected a name");
        Node n{t_.substr(b, i_ - b), {}, false};
        skip();
        if (i_ < t_.size() && t_[i_] == '(') {
            ++i_;
            n.call = true;
            while (true) {
                n.args.push_back(expr());
                skip();
                if (i_ < t_.size() && t_[i_] == ',') {
                    ++i_;
                    continue;
                }
                if (i_ < t_.size() && t_[i_] == ')') {
                    ++i_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        return n;
    }

    const std::string& t_;
    std::size_t i_ = 0;
};

Path as_path(const Term& t)
{
    if (t.kind == TermKind::TwoCell)
        throw ValidationError("a 2-cell was used where a 1-cell is expected");
    return t.kind == TermKind::Object ? identity_path(t.object) : t.path;
}

Cell2 as_cell(const Term& t) { return t.kind == TermKind::TwoCell ? t.cell : identity_cell(as_path(t)); }

Term make(TermKind k)
{
    Term t;
    t.kind = k;
    return t;
}

Term evaluate(const Node& n, const Signature& sig, int depth)
{
    if (depth > 64)
        throw ParseError("macro expansion too deep");
    if (!n.call) {
        if (auto o = sig.object(n.head)) {
            Term t = make(TermKind::Object);
            t.object = {*o};
            return t;
        }
        if (auto g = sig.one_cell(n.head)) {
            const auto& gen = sig.one_cells()[*g];
            Term t = make(TermKind::OneCell);
            t.path = Path{gen.source, gen.target, {Slice{{}, *g, {}}}};
            return t;
        }
        if (auto g = sig.two_cell(n.head)) {
            const auto& gen = sig.two_cells()[*g];
            Term t = make(TermKind::TwoCell);
            t.cell = Cell2{gen.source, {Layer{0, {}, {}, *g, false}}, gen.target};
            return t;
        }
        if (const std::string* m = sig.macro(n.head))
            return evaluate(Parser(*m).parse(), sig, depth + 1);
        throw ParseError("unknown generator '" + n.head + "'");
    }
    std::vector<Term> a;
    for (const auto& x : n.args)
        a.push_back(evaluate(x, sig, depth));
    TermKind top = TermKind::Object;
    for (const auto& x : a)
        top = std::max(top, x.kind);

    if (n.head == "id") {
        if (a.size() != 1)
            throw ParseError("id takes one argument");
        if (a[0].kind == TermKind::Object) {
            Term t = make(TermKind::OneCell);
            t.path = identity_path(a[0].object);
            return t;
        }
        if (a[0].kind == TermKind::OneCell) {
            Term t = make(TermKind::TwoCell);
            t.cell = identity_cell(a[0].path);
            return t;
        }
        throw ValidationError("identities on 2-cells are not part of the calculus");
    }
    if (n.head == "inv") {
        if (a.size() != 1 || a[0].kind != TermKind::TwoCell)
            throw ParseError("inv takes one 2-cell");
        Term t = make(TermKind::TwoCell);
        t.cell = Cell2{a[0].cell.target, {}, a[0].cell.source};
        for (auto it = a[0].cell.layers.rbegin(); it != a[0].cell.layers.rend(); ++it) {
            if (!sig.invertible(it->gen))
                throw ValidationError("2-cell " + sig.two_cells()[it->gen].name + " is not invertible");
            Layer l = *it;
            l.inverse = !l.inverse;
            t.cell.layers.push_back(l);
        }
        return t;
    }
    if (n.head == "tensor") {
        Term t = make(top);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (top == TermKind::Object)
                t.object = i ? concat(t.object, a[i].object) : a[i].object;
            else if (top == TermKind::OneCell)
                t.path = i ? tensor_paths(t.path, as_path(a[i])) : as_path(a[i]);
            else
                t.cell = i ? tensor_cells(t.cell, as_cell(a[i])) : as_cell(a[i]);
        }
        return t;
    }
    if (n.head == "comp") {
        if (top == TermKind::Object)
            throw ValidationError("comp needs 1-cells or 2-cells");
        Term t = make(top);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (top == TermKind::OneCell)
                t.path = i ? compose_paths(t.path, as_path(a[i])) : as_path(a[i]);
            else
                t.cell = i ? vertical(t.cell, as_cell(a[i])) : as_cell(a[i]);
        }
        return t;
    }
    if (n.head == "side") {
        if (a.empty())
            throw ParseError("side needs arguments");
        // side(A, B, C) = A (.) B (.) C; the last argument acts first.
        Term t = make(TermKind::TwoCell);
        t.cell = as_cell(a.back());
        for (std::size_t i = a.size() - 1; i-- > 0;)
            t.cell = side(as_cell(a[i]), t.cell);
        return t;
    }
    throw ParseError("unknown operator '" + n.head + "'");
}

} // namespace

Term parse_term(const std::string& text, const Signature& sig)
{
    Term t = evaluate(Parser(text).parse(), sig, 0);
    if (t.kind == TermKind::OneCell)
        check_path(sig, t.path, "1-cell");
    if (t.kind == TermKind::TwoCell) {
        Path end = typecheck(sig, t.cell.source, t.cell.layers);
        if (!(end == t.cell.target))
            throw ValidationError("2-cell layers do not reach the declared target");
    }
    return t;
}

Path serre_word() { return parse_term("serre").path; }
Path inverse_serre_word() { return parse_term("serre_inv").path; }
Cell2 radford_word() { return parse_term("radford").cell; }
Cell2 radford_inverse_word() { return parse_term("radford_inv").cell; }
Cell2 radford_conjugated_word() { return parse_term("radford_conj").cell; }

} // namespace tckit
