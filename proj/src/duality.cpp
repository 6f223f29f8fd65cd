#include "tckit/duality.hpp"

#include "tckit/sampling.hpp"

namespace tckit {

namespace {

Word leaf(int a)
{
    return Word::leaf(a);
}

Word pair(int a, int b)
{
    return Word::pair(Word::leaf(a), Word::leaf(b));
}

// Checks that ev : x y -> 1 and coev : 1 -> y x are tagged as a dual pair
// and returns (x, y).
std::pair<int, int> dual_pair_labels(const FSymbolTable& F, const MorphismScalar& ev, const MorphismScalar& coev)
{
    const FusionRing& R = F.ring();
    Word one = leaf(R.unit());
    if (ev.source.is_leaf() || !ev.source.left().is_leaf() || !ev.source.right().is_leaf() || ev.target != one)
        throw DomainError("evaluation must lie in Hom(x y, 1)");
    int x = ev.source.left().label(), y = ev.source.right().label();
    if (y != R.dual(x))
        throw DomainError("mismatched dual labels: " + R.label(y) + " is not dual to " + R.label(x));
    if (coev.source != one || coev.target != pair(y, x))
        throw DomainError("coevaluation must lie in Hom(1, y x)");
    return {x, y};
}

} // namespace

Scalar zigzag_first(const FSymbolTable& F, const MorphismScalar& ev, const MorphismScalar& coev)
{
    auto [x, y] = dual_pair_labels(F, ev, coev);
    Calculus C(F);
    Word X = leaf(x), Y = leaf(y);
    Morphism m = C.lunit_inv(Y);
    m = C.compose(C.tensor(C.from_scalar(coev), C.identity(Y)), m);
    m = C.compose(C.assoc(Y, X, Y), m);
    m = C.compose(C.tensor(C.identity(Y), C.from_scalar(ev)), m);
    m = C.compose(C.runit(Y), m);
    return C.to_scalar(m).value;
}

Scalar zigzag_second(const FSymbolTable& F, const MorphismScalar& ev, const MorphismScalar& coev)
{
    auto [x, y] = dual_pair_labels(F, ev, coev);
    Calculus C(F);
    Word X = leaf(x), Y = leaf(y);
    Morphism m = C.runit_inv(X);
    m = C.compose(C.tensor(C.identity(X), C.from_scalar(coev)), m);
    m = C.compose(C.assoc_inv(X, Y, X), m);
    m = C.compose(C.tensor(C.from_scalar(ev), C.identity(X)), m);
    m = C.compose(C.lunit(X), m);
    return C.to_scalar(m).value;
}

MorphismScalar gamma(const FSymbolTable& F, const MorphismScalar& w, GammaDirection direction)
{
    const FusionRing& R = F.ring();
    const FieldSpec& k = F.field();
    Word one = leaf(R.unit());
    if (w.value.is_zero())
        throw DomainError("gamma of a zero morphism");
    bool is_ev = w.target == one && !w.source.is_leaf();
    bool is_coev = w.source == one && !w.target.is_leaf();
    if (direction == GammaDirection::EvaluationToCoevaluation ? !is_ev : !is_coev)
        throw DomainError("witness hom space does not match the gamma direction");

    MorphismScalar ev, coev;
    int x, y;
    if (direction == GammaDirection::EvaluationToCoevaluation) {
        ev = w;
        if (!w.source.left().is_leaf() || !w.source.right().is_leaf())
            throw DomainError("evaluation must lie in Hom(x y, 1)");
        x = w.source.left().label();
        y = w.source.right().label();
        if (y != R.dual(x))
            throw DomainError("mismatched dual labels: " + R.label(y) + " is not dual to " + R.label(x));
        coev = MorphismScalar{Scalar::one(k), one, pair(y, x)};
    } else {
        coev = w;
        if (!w.target.left().is_leaf() || !w.target.right().is_leaf())
            throw DomainError("coevaluation must lie in Hom(1, y x)");
        y = w.target.left().label();
        x = w.target.right().label();
        if (y != R.dual(x))
            throw DomainError("mismatched dual labels: " + R.label(y) + " is not dual to " + R.label(x));
        ev = MorphismScalar{Scalar::one(k), pair(x, y), one};
    }
    Scalar z = zigzag_first(F, ev, coev);
    if (z.is_zero())
        throw ZigzagObstruction("zigzag obstruction: F-entry " +
                                hexatuple_text(R, {y, x, y, y, R.unit(), R.unit()}) + " vanishes");
    MorphismScalar partner = direction == GammaDirection::EvaluationToCoevaluation ? coev : ev;
    partner.value = z.inverse();
    MorphismScalar e2 = direction == GammaDirection::EvaluationToCoevaluation ? ev : partner;
    MorphismScalar c2 = direction == GammaDirection::EvaluationToCoevaluation ? partner : coev;
    if (!zigzag_second(F, e2, c2).is_one())
        throw ValidationError("second zigzag fails for label " + R.label(x) + "; F-data is not coherent");
    return partner;
}

MorphismScalar gamma(const FSymbolTable& F, const MorphismScalar& w)
{
    Word one = leaf(F.ring().unit());
    return gamma(F, w,
                 w.target == one ? GammaDirection::EvaluationToCoevaluation
                                 : GammaDirection::CoevaluationToEvaluation);
}

Witness standard_duality(const FSymbolTable& F, int i)
{
    const FusionRing& R = F.ring();
    Scalar one = Scalar::one(F.field());
    MorphismScalar coev{one, leaf(R.unit()), pair(R.dual(i), i)};
    return Witness{one, gamma(F, coev, GammaDirection::CoevaluationToEvaluation).value};
}

WitnessTable standard_witnesses(const FSymbolTable& F)
{
    WitnessTable t;
    for (int i = 0; i < F.rank(); ++i)
        t.push_back(standard_duality(F, i));
    return t;
}

DualityChoices standard_choices(const FSymbolTable& F)
{
    WitnessTable t = standard_witnesses(F);
    DualityChoices c;
    for (int i = 0; i < F.rank(); ++i) {
        int d = F.ring().dual(i);
        c.level.push_back({t[i], t[d], t[i]});
    }
    return c;
}

DualityChoices random_choices(const FSymbolTable& F, std::mt19937_64& rng)
{
    const FusionRing& R = F.ring();
    DualityChoices c;
    for (int i = 0; i < F.rank(); ++i) {
        std::array<Witness, 3> lv;
        for (int k = 0; k < 3; ++k) {
            int x = k % 2 == 0 ? i : R.dual(i);
            Scalar s = random_nonzero_scalar(F.field(), rng);
            MorphismScalar coev{s, leaf(R.unit()), pair(R.dual(x), x)};
            lv[k] = Witness{s, gamma(F, coev, GammaDirection::CoevaluationToEvaluation).value};
        }
        c.level.push_back(lv);
    }
    return c;
}

MorphismScalar right_inverse(const MorphismScalar& f)
{
    if (!f.target.is_leaf() || f.source.is_leaf())
        throw DomainError("right inverse is only taken of maps x y -> 1");
    return MorphismScalar{f.value.inverse(), f.target, f.source};
}

MorphismScalar left_inverse(const MorphismScalar& g)
{
    if (!g.source.is_leaf() || g.target.is_leaf())
        throw DomainError("left inverse is only taken of maps 1 -> x y");
    return MorphismScalar{g.value.inverse(), g.target, g.source};
}

MorphismScalar left_dual(const FSymbolTable& F, const MorphismScalar& f, const WitnessTable& source_table,
                         const WitnessTable& target_table)
{
    Calculus C(F);
    return C.to_scalar(C.left_dual(C.from_scalar(f), source_table, target_table));
}

Scalar quantum_trace(const FSymbolTable& F, const DualityChoices& choices, int i, const Scalar& a)
{
    const FusionRing& R = F.ring();
    Calculus C(F);
    int x = i, dx = R.dual(i), u = R.unit();
    Morphism ev = C.scale(C.fuse(x, dx, u), choices.level[i][0].ev);
    Morphism coev = C.scale(C.split(x, dx, u), choices.level[i][1].coev);
    Morphism mid = C.tensor(C.scale(C.identity(leaf(x)), a), C.identity(leaf(dx)));
    return C.to_scalar(C.compose(ev, C.compose(mid, coev))).value;
}

Scalar squared_norm(const FSymbolTable& F, const DualityChoices& choices, int i, const Scalar& a)
{
    const FusionRing& R = F.ring();
    Calculus C(F);
    int x = i, dx = R.dual(i), u = R.unit();
    Scalar first = quantum_trace(F, choices, i, a);

    // *(a^-1) : ***x -> *x, bending with coev_x (level 0) and ev_{**x} (level 2).
    WitnessTable src = standard_witnesses(F), tgt = src;
    src[x] = choices.level[i][0];
    tgt[x] = choices.level[i][2];
    Morphism inv = C.scale(C.identity(leaf(x)), a.inverse());
    Morphism b = C.left_dual(inv, src, tgt);

    // Tr_{*x}(b) = ev_{*x} o (b (x) id_{**x}) o coev_{**x}.
    Morphism ev = C.scale(C.fuse(dx, x, u), choices.level[i][1].ev);
    Morphism coev = C.scale(C.split(dx, x, u), choices.level[i][2].coev);
    Morphism mid = C.tensor(b, C.identity(leaf(x)));
    Scalar second = C.to_scalar(C.compose(ev, C.compose(mid, coev))).value;
    return first * second;
}

Scalar squared_norm(const FSymbolTable& F, int i)
{
    return squared_norm(F, standard_choices(F), i, Scalar::one(F.field()));
}

Scalar global_dimension(const FSymbolTable& F)
{
    DualityChoices c = standard_choices(F);
    Scalar one = Scalar::one(F.field());
    Scalar sum = Scalar::zero(F.field());
    for (int i = 0; i < F.rank(); ++i)
        sum += squared_norm(F, c, i, one);
    return sum;
}

} // namespace tckit
