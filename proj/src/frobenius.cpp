#include "tckit/frobenius.hpp"

namespace tckit {

FrobeniusData build_frobenius(const FSymbolTable& F, const std::optional<std::vector<Scalar>>& scaling)
{
    const FusionRing& R = F.ring();
    const int n = R.rank();
    if (scaling && scaling->size() != static_cast<std::size_t>(n))
        throw DomainError("scaling vector has wrong length");
    WitnessTable W = standard_witnesses(F);
    Word one = Word::leaf(R.unit());

    std::vector<MorphismScalar> e(n), e_dual(n);
    for (int i = 0; i < n; ++i) {
        Word w = Word::pair(Word::leaf(i), Word::leaf(R.dual(i)));
        Scalar c = W[i].ev;
        if (scaling)
            c *= (*scaling)[i];
        if (c.is_zero())
            throw DomainError("zero evaluation coefficient at label " + R.label(i));
        e[i] = MorphismScalar{c, w, one};
        e_dual[i] = left_dual(F, right_inverse(e[i]), W, W);
    }
    FrobeniusData d;
    d.table = &F;
    for (int i = 0; i < n; ++i) {
        int di = R.dual(i);
        d.factor.push_back(FrobeniusFactor{e[i], gamma(F, e[di]), e_dual[i], gamma(F, e_dual[di])});
    }
    // The counit picks the unit summand, on which u is the identity.
    d.counit_unit = Scalar::one(F.field());
    d.counit_normalized = true;
    return d;
}

FrobeniusReport frobenius_axioms_check(const FrobeniusData& data)
{
    const FSymbolTable& F = *data.table;
    const FusionRing& R = F.ring();
    FrobeniusReport rep;
    auto fail = [&](int i, std::string what) {
        rep.ok = false;
        rep.failing_label = i;
        rep.detail = what + " fails at label " + R.label(i);
        return rep;
    };
    for (int i = 0; i < R.rank(); ++i) {
        int di = R.dual(i);
        const auto& f = data.factor[i];
        const auto& g = data.factor[di];
        if (!zigzag_first(F, g.e, f.copairing).is_one() || !zigzag_second(F, g.e, f.copairing).is_one())
            return fail(i, "pairing zigzag");
        if (!zigzag_first(F, g.e_dual, f.copairing_dual).is_one() ||
            !zigzag_second(F, g.e_dual, f.copairing_dual).is_one())
            return fail(i, "dual pairing zigzag");
    }
    if (!data.counit_unit.is_one())
        return fail(R.unit(), "counit normalization");
    return rep;
}

Scalar window_element(const FrobeniusData& data)
{
    const FSymbolTable& F = *data.table;
    Calculus C(F);
    Scalar w = Scalar::zero(F.field());
    for (const auto& f : data.factor)
        w += C.compose(f.e, f.copairing).value * C.compose(f.e_dual, f.copairing_dual).value;
    return w;
}

SeparabilityReport separability_report(const FSymbolTable& F)
{
    SeparabilityReport r;
    r.dimension = global_dimension(F);
    r.separable = !r.dimension.is_zero();
    r.note = r.separable ? "splitting of the multiplication: Delta / " + r.dimension.to_string()
                         : "global dimension vanishes";
    return r;
}

bool separability_check(const FSymbolTable& F) { return separability_report(F).separable; }

} // namespace tckit
