#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tckit/duality.hpp"

namespace tckit {

/// Scalar shadow of A = sum_i L_i [x] *L_i on one label factor.
struct FrobeniusFactor {
    MorphismScalar e;              // e_i : i i* -> 1
    MorphismScalar copairing;      // gamma(e_{i*}) : 1 -> i i*
    MorphismScalar e_dual;         // *(e_i^-) : i i* -> 1
    MorphismScalar copairing_dual; // gamma(*(e_{i*}^-)) : 1 -> i i*
};

struct FrobeniusData {
    const FSymbolTable* table = nullptr;
    std::vector<FrobeniusFactor> factor;
    Scalar counit_unit; // lambda o u
    bool counit_normalized = false;
};

/// e_i defaults to the standard evaluation; `scaling` multiplies each e_i.
FrobeniusData build_frobenius(const FSymbolTable& F, const std::optional<std::vector<Scalar>>& scaling = {});

struct FrobeniusReport {
    bool ok = true;
    std::optional<int> failing_label;
    std::string detail;
};

FrobeniusReport frobenius_axioms_check(const FrobeniusData& data);

/// sum_i (e_i o gamma(e_i*)) (*(e_i^-) o gamma(*(e_i*^-))).
Scalar window_element(const FrobeniusData& data);

struct SeparabilityReport {
    bool separable = false;
    Scalar dimension;
    std::string note;
};

SeparabilityReport separability_report(const FSymbolTable& F);
bool separability_check(const FSymbolTable& F);

} // namespace tckit
