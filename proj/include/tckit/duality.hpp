#pragma once

#include <array>
#include <random>
#include <vector>

#include "tckit/morphism.hpp"

namespace tckit {

/// Witnesses along the left-dual chain of each label x:
/// level[x][0] witnesses *x as dual of x, level[x][1] witnesses **x as dual
/// of *x, level[x][2] witnesses ***x as dual of **x. In the skeleton **x is
/// the leaf x itself, so the identification **x -> x is an explicit scalar
/// argument of quantum_trace and squared_norm rather than hidden data.
struct DualityChoices {
    std::vector<std::array<Witness, 3>> level;
};

/// coev_x coefficient 1, ev_x solved from the first zigzag; the second
/// zigzag is verified. Throws ZigzagObstruction on a vanishing F-entry.
Witness standard_duality(const FSymbolTable& F, int i);
WitnessTable standard_witnesses(const FSymbolTable& F);
DualityChoices standard_choices(const FSymbolTable& F);

/// Random nonzero coevaluation coefficients with zigzag-solved evaluations.
DualityChoices random_choices(const FSymbolTable& F, std::mt19937_64& rng);

/// Scalar of (id_y (x) ev) o assoc o (coev (x) id_y) on y, for ev : x y -> 1
/// and coev : 1 -> y x.
Scalar zigzag_first(const FSymbolTable& F, const MorphismScalar& ev, const MorphismScalar& coev);
/// Scalar of (ev (x) id_x) o assoc^-1 o (id_x (x) coev) on x.
Scalar zigzag_second(const FSymbolTable& F, const MorphismScalar& ev, const MorphismScalar& coev);

enum class GammaDirection { EvaluationToCoevaluation, CoevaluationToEvaluation };

/// The unique partner completing a nonzero evaluation x y -> 1 (resp.
/// coevaluation 1 -> y x) to a pair witnessing y as a left dual of x.
MorphismScalar gamma(const FSymbolTable& F, const MorphismScalar& witness, GammaDirection direction);
/// Direction read off the hom space of the witness.
MorphismScalar gamma(const FSymbolTable& F, const MorphismScalar& witness);

/// f^- with f o f^- = id_1 for f : x y -> 1, and -g with -g o g = id_1 for
/// g : 1 -> x y. Both invert the coefficient and swap the hom space.
MorphismScalar right_inverse(const MorphismScalar& f);
MorphismScalar left_inverse(const MorphismScalar& g);

/// Left dual of a tagged scalar morphism with the given leaf witnesses.
MorphismScalar left_dual(const FSymbolTable& F, const MorphismScalar& f, const WitnessTable& source_table,
                         const WitnessTable& target_table);

/// Tr(a) = ev_x o (a (x) id) o coev_{*x} for a : **x -> x.
Scalar quantum_trace(const FSymbolTable& F, const DualityChoices& choices, int i, const Scalar& a);

/// ||x|| = Tr(a) Tr(*(a^-1)) with default choices and a = 1.
Scalar squared_norm(const FSymbolTable& F, int i);
Scalar squared_norm(const FSymbolTable& F, const DualityChoices& choices, int i, const Scalar& a);

/// Sum of squared norms over all labels, in label order.
Scalar global_dimension(const FSymbolTable& F);

} // namespace tckit
