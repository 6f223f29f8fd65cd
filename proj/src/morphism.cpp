#include "tckit/morphism.hpp"

#include <sstream>

namespace tckit {

Word Word::leaf(int label)
{
    Word w;
    w.label_ = label;
    return w;
}

Word Word::pair(const Word& l, const Word& r)
{
    Word w;
    w.l_ = std::make_shared<const Word>(l);
    w.r_ = std::make_shared<const Word>(r);
    w.size_ = 1 + l.size_ + r.size_;
    return w;
}

std::string Word::to_string(const FusionRing& ring) const
{
    if (is_leaf())
        return ring.label(label_);
    return "(" + l_->to_string(ring) + " " + r_->to_string(ring) + ")";
}

bool Word::operator==(const Word& o) const
{
    if (is_leaf() || o.is_leaf())
        return label_ == o.label_;
    return size_ == o.size_ && *l_ == *o.l_ && *r_ == *o.r_;
}

bool Word::operator<(const Word& o) const
{
    if (is_leaf() != o.is_leaf())
        return is_leaf();
    if (is_leaf())
        return label_ < o.label_;
    if (*l_ != *o.l_)
        return *l_ < *o.l_;
    return *r_ < *o.r_;
}

void Calculus::enumerate(const Word& w, int charge, std::vector<Tree>& out) const
{
    if (w.is_leaf()) {
        if (w.label() == charge)
            out.push_back({charge});
        return;
    }
    int r = ring().rank();
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            if (!ring().admissible(x, y, charge))
                continue;
            std::vector<Tree> ls, rs;
            enumerate(w.left(), x, ls);
            if (ls.empty())
                continue;
            enumerate(w.right(), y, rs);
            for (const auto& lt : ls)
                for (const auto& rt : rs) {
                    Tree t;
                    t.reserve(w.size());
                    t.push_back(charge);
                    t.insert(t.end(), lt.begin(), lt.end());
                    t.insert(t.end(), rt.begin(), rt.end());
                    out.push_back(std::move(t));
                }
        }
}

std::vector<Tree> Calculus::trees(const Word& w, int charge) const
{
    std::vector<Tree> out;
    enumerate(w, charge, out);
    return out;
}

std::vector<Tree> Calculus::trees(const Word& w) const
{
    std::vector<Tree> out;
    for (int d = 0; d < ring().rank(); ++d) {
        auto t = trees(w, d);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

void Calculus::add_entry(Morphism& m, const Tree& t, const Tree& s, const Scalar& v)
{
    if (v.is_zero())
        return;
    auto key = std::make_pair(t, s);
    auto it = m.entries.find(key);
    if (it == m.entries.end()) {
        m.entries.emplace(std::move(key), v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        m.entries.erase(it);
}

Morphism Calculus::zero(const Word& s, const Word& t) const
{
    return Morphism{s, t, {}};
}

Morphism Calculus::identity(const Word& w) const
{
    Morphism m = zero(w, w);
    for (const auto& t : trees(w))
        m.entries.emplace(std::make_pair(t, t), Scalar::one(F_.field()));
    return m;
}

Morphism Calculus::compose(const Morphism& g, const Morphism& f) const
{
    if (f.target != g.source)
        throw DomainError("composition of morphisms with mismatched words " + f.target.to_string(ring()) +
                          " and " + g.source.to_string(ring()));
    std::map<Tree, std::vector<std::pair<const Tree*, const Scalar*>>> by_mid;
    for (const auto& [k, v] : f.entries)
        by_mid[k.first].emplace_back(&k.second, &v);
    Morphism out = zero(f.source, g.target);
    for (const auto& [k, v] : g.entries) {
        auto it = by_mid.find(k.second);
        if (it == by_mid.end())
            continue;
        for (const auto& [s, fv] : it->second)
            add_entry(out, k.first, *s, v * *fv);
    }
    return out;
}

Morphism Calculus::tensor(const Morphism& f, const Morphism& g) const
{
    Morphism out = zero(Word::pair(f.source, g.source), Word::pair(f.target, g.target));
    for (const auto& [kf, vf] : f.entries)
        for (const auto& [kg, vg] : g.entries) {
            int x = kf.first.front(), y = kg.first.front();
            for (int d : ring().products(x, y)) {
                Tree t{d}, s{d};
                t.insert(t.end(), kf.first.begin(), kf.first.end());
                t.insert(t.end(), kg.first.begin(), kg.first.end());
                s.insert(s.end(), kf.second.begin(), kf.second.end());
                s.insert(s.end(), kg.second.begin(), kg.second.end());
                add_entry(out, t, s, vf * vg);
            }
        }
    return out;
}

Morphism Calculus::scale(const Morphism& f, const Scalar& s) const
{
    Morphism out = zero(f.source, f.target);
    for (const auto& [k, v] : f.entries)
        add_entry(out, k.first, k.second, v * s);
    return out;
}

Morphism Calculus::add(const Morphism& f, const Morphism& g) const
{
    if (f.source != g.source || f.target != g.target)
        throw DomainError("sum of morphisms between different words");
    Morphism out = f;
    for (const auto& [k, v] : g.entries)
        add_entry(out, k.first, k.second, v);
    return out;
}

Morphism Calculus::assoc(const Word& A, const Word& B, const Word& C) const
{
    Word src = Word::pair(Word::pair(A, B), C), tgt = Word::pair(A, Word::pair(B, C));
    Morphism out = zero(src, tgt);
    std::size_t na = A.size(), nb = B.size();
    for (const auto& s : trees(src)) {
        // s = [d, e, sA..., sB..., sC...]
        int d = s[0], e = s[1];
        Tree sA(s.begin() + 2, s.begin() + 2 + na);
        Tree sB(s.begin() + 2 + na, s.begin() + 2 + na + nb);
        Tree sC(s.begin() + 2 + na + nb, s.end());
        int a = sA[0], b = sB[0], c = sC[0];
        for (int f : F_.right_channels(a, b, c, d)) {
            Tree t{d};
            t.insert(t.end(), sA.begin(), sA.end());
            t.push_back(f);
            t.insert(t.end(), sB.begin(), sB.end());
            t.insert(t.end(), sC.begin(), sC.end());
            add_entry(out, t, s, F_.F(a, b, c, d, e, f));
        }
    }
    return out;
}

Morphism Calculus::assoc_inv(const Word& A, const Word& B, const Word& C) const
{
    Word src = Word::pair(A, Word::pair(B, C)), tgt = Word::pair(Word::pair(A, B), C);
    Morphism out = zero(src, tgt);
    std::size_t na = A.size(), nb = B.size();
    for (const auto& s : trees(src)) {
        // s = [d, sA..., f, sB..., sC...]
        int d = s[0];
        Tree sA(s.begin() + 1, s.begin() + 1 + na);
        int f = s[1 + na];
        Tree sB(s.begin() + 2 + na, s.begin() + 2 + na + nb);
        Tree sC(s.begin() + 2 + na + nb, s.end());
        int a = sA[0], b = sB[0], c = sC[0];
        for (int e : F_.left_channels(a, b, c, d)) {
            Tree t{d, e};
            t.insert(t.end(), sA.begin(), sA.end());
            t.insert(t.end(), sB.begin(), sB.end());
            t.insert(t.end(), sC.begin(), sC.end());
            add_entry(out, t, s, F_.Finv_or_zero(a, b, c, d, f, e));
        }
    }
    return out;
}

Morphism Calculus::lunit(const Word& A) const
{
    Morphism out = zero(Word::pair(unit_word(), A), A);
    for (const auto& t : trees(A)) {
        Tree s{t[0], ring().unit()};
        s.insert(s.end(), t.begin(), t.end());
        add_entry(out, t, s, Scalar::one(F_.field()));
    }
    return out;
}

Morphism Calculus::lunit_inv(const Word& A) const
{
    Morphism out = zero(A, Word::pair(unit_word(), A));
    for (const auto& s : trees(A)) {
        Tree t{s[0], ring().unit()};
        t.insert(t.end(), s.begin(), s.end());
        add_entry(out, t, s, Scalar::one(F_.field()));
    }
    return out;
}

Morphism Calculus::runit(const Word& A) const
{
    Morphism out = zero(Word::pair(A, unit_word()), A);
    for (const auto& t : trees(A)) {
        Tree s{t[0]};
        s.insert(s.end(), t.begin(), t.end());
        s.push_back(ring().unit());
        add_entry(out, t, s, Scalar::one(F_.field()));
    }
    return out;
}

Morphism Calculus::runit_inv(const Word& A) const
{
    Morphism out = zero(A, Word::pair(A, unit_word()));
    for (const auto& s : trees(A)) {
        Tree t{s[0]};
        t.insert(t.end(), s.begin(), s.end());
        t.push_back(ring().unit());
        add_entry(out, t, s, Scalar::one(F_.field()));
    }
    return out;
}

Morphism Calculus::split(int a, int b, int c) const
{
    if (!ring().admissible(a, b, c))
        throw DomainError("inadmissible vertex (" + ring().label(a) + "," + ring().label(b) + ";" +
                          ring().label(c) + ")");
    Morphism out = zero(Word::leaf(c), Word::pair(Word::leaf(a), Word::leaf(b)));
    add_entry(out, Tree{c, a, b}, Tree{c}, Scalar::one(F_.field()));
    return out;
}

Morphism Calculus::fuse(int a, int b, int c) const
{
    if (!ring().admissible(a, b, c))
        throw DomainError("inadmissible vertex (" + ring().label(a) + "," + ring().label(b) + ";" +
                          ring().label(c) + ")");
    Morphism out = zero(Word::pair(Word::leaf(a), Word::leaf(b)), Word::leaf(c));
    add_entry(out, Tree{c}, Tree{c, a, b}, Scalar::one(F_.field()));
    return out;
}

std::size_t Calculus::hom_dimension(const Word& s, const Word& t) const
{
    std::size_t n = 0;
    for (int d = 0; d < ring().rank(); ++d)
        n += trees(s, d).size() * trees(t, d).size();
    return n;
}

MorphismScalar Calculus::to_scalar(const Morphism& f) const
{
    std::pair<Tree, Tree> basis;
    std::size_t n = 0;
    for (int d = 0; d < ring().rank(); ++d) {
        auto ss = trees(f.source, d), ts = trees(f.target, d);
        n += ss.size() * ts.size();
        if (!ss.empty() && !ts.empty())
            basis = {ts.front(), ss.front()};
    }
    if (n != 1)
        throw DomainError("hom space " + f.source.to_string(ring()) + " -> " + f.target.to_string(ring()) +
                          " is not one-dimensional");
    auto it = f.entries.find(basis);
    Scalar v = it == f.entries.end() ? Scalar::zero(F_.field()) : it->second;
    return MorphismScalar{v, f.source, f.target};
}

Morphism Calculus::from_scalar(const MorphismScalar& m) const
{
    Morphism out = zero(m.source, m.target);
    std::size_t n = 0;
    for (int d = 0; d < ring().rank(); ++d) {
        auto ss = trees(m.source, d), ts = trees(m.target, d);
        n += ss.size() * ts.size();
        if (!ss.empty() && !ts.empty())
            add_entry(out, ts.front(), ss.front(), m.value);
    }
    if (n != 1)
        throw DomainError("hom space " + m.source.to_string(ring()) + " -> " + m.target.to_string(ring()) +
                          " is not one-dimensional");
    return out;
}

MorphismScalar Calculus::compose(const MorphismScalar& g, const MorphismScalar& f) const
{
    if (f.target != g.source)
        throw DomainError("composition of tagged scalars with mismatched hom spaces");
    return to_scalar(compose(from_scalar(g), from_scalar(f)));
}

Word Calculus::dual_word(const Word& w) const
{
    if (w.is_leaf())
        return Word::leaf(ring().dual(w.label()));
    return Word::pair(dual_word(w.right()), dual_word(w.left()));
}

Morphism Calculus::ev_word(const Word& w, const WitnessTable& table) const
{
    if (w.is_leaf()) {
        int a = w.label();
        return scale(fuse(a, ring().dual(a), ring().unit()), table[a].ev);
    }
    const Word &A = w.left(), &B = w.right();
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = assoc(A, B, Word::pair(dB, dA));
    m = compose(tensor(identity(A), assoc_inv(B, dB, dA)), m);
    m = compose(tensor(identity(A), tensor(ev_word(B, table), identity(dA))), m);
    m = compose(tensor(identity(A), lunit(dA)), m);
    return compose(ev_word(A, table), m);
}

Morphism Calculus::coev_word(const Word& w, const WitnessTable& table) const
{
    if (w.is_leaf()) {
        int a = w.label();
        return scale(split(ring().dual(a), a, ring().unit()), table[a].coev);
    }
    const Word &A = w.left(), &B = w.right();
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = coev_word(B, table);
    m = compose(tensor(runit_inv(dB), identity(B)), m);
    m = compose(tensor(tensor(identity(dB), coev_word(A, table)), identity(B)), m);
    m = compose(tensor(assoc_inv(dB, dA, A), identity(B)), m);
    return compose(assoc(Word::pair(dB, dA), A, B), m);
}

Morphism Calculus::ev_right_word(const Word& w, const WitnessTable& table) const
{
    if (w.is_leaf()) {
        int a = w.label(), da = ring().dual(a);
        return scale(fuse(da, a, ring().unit()), table[da].ev);
    }
    const Word &A = w.left(), &B = w.right();
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = assoc(dB, dA, Word::pair(A, B));
    m = compose(tensor(identity(dB), assoc_inv(dA, A, B)), m);
    m = compose(tensor(identity(dB), tensor(ev_right_word(A, table), identity(B))), m);
    m = compose(tensor(identity(dB), lunit(B)), m);
    return compose(ev_right_word(B, table), m);
}

Morphism Calculus::coev_right_word(const Word& w, const WitnessTable& table) const
{
    if (w.is_leaf()) {
        int a = w.label(), da = ring().dual(a);
        return scale(split(a, da, ring().unit()), table[da].coev);
    }
    const Word &A = w.left(), &B = w.right();
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = coev_right_word(A, table);
    m = compose(tensor(runit_inv(A), identity(dA)), m);
    m = compose(tensor(tensor(identity(A), coev_right_word(B, table)), identity(dA)), m);
    m = compose(tensor(assoc_inv(A, B, dB), identity(dA)), m);
    return compose(assoc(Word::pair(A, B), dB, dA), m);
}

Morphism Calculus::left_dual(const Morphism& f, const WitnessTable& source_table,
                             const WitnessTable& target_table) const
{
    const Word &A = f.source, &B = f.target;
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = lunit_inv(dB);
    m = compose(tensor(coev_word(A, source_table), identity(dB)), m);
    m = compose(tensor(tensor(identity(dA), f), identity(dB)), m);
    m = compose(assoc(dA, B, dB), m);
    m = compose(tensor(identity(dA), ev_word(B, target_table)), m);
    return compose(runit(dA), m);
}

Morphism Calculus::right_dual(const Morphism& f, const WitnessTable& source_table,
                              const WitnessTable& target_table) const
{
    const Word &A = f.source, &B = f.target;
    Word dA = dual_word(A), dB = dual_word(B);
    Morphism m = runit_inv(dB);
    m = compose(tensor(identity(dB), coev_right_word(A, source_table)), m);
    m = compose(tensor(identity(dB), tensor(f, identity(dA))), m);
    m = compose(assoc_inv(dB, B, dA), m);
    m = compose(tensor(ev_right_word(B, target_table), identity(dA)), m);
    return compose(lunit(dA), m);
}

} // namespace tckit
