#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tckit/duality.hpp"

namespace tckit {

/// tau^{ij}_k: the scalar by which the right double dual acts on the
/// splitting vector k -> i j, with standard witnesses.
struct DoubleDualGauge {
    std::map<Triple, Scalar> tau;
};

struct PivotalStructure {
    std::vector<Scalar> p;
    friend bool operator==(const PivotalStructure&, const PivotalStructure&) = default;
};

/// One equation prod_v x_v^exponents[v] = constant.
struct MultiplicativeEquation {
    std::vector<long> exponents;
    Scalar constant;
};

/// All solutions with every x_v nonzero, sorted. Integer row reduction of
/// the exponent matrix, then back substitution with exact root extraction.
/// Free variables are enumerated over prime fields; elsewhere they make
/// the solution set infinite and DomainError is thrown.
std::vector<std::vector<Scalar>> solve_multiplicative(std::size_t variables,
                                                      const std::vector<MultiplicativeEquation>& equations,
                                                      const FieldSpec& field);

DoubleDualGauge double_dual_gauge(const FSymbolTable& F);

/// All p with p_unit = 1 and p_i p_j = tau^{ij}_k p_k.
std::vector<PivotalStructure> pivotal_solve(const FSymbolTable& F);
bool pivotal_valid(const FSymbolTable& F, const DoubleDualGauge& g, const std::vector<Scalar>& p);

/// d_i = quantum_trace with a = p_i under the standard choices.
std::vector<Scalar> quantum_dimensions(const FSymbolTable& F, const PivotalStructure& P);
bool spherical_check(const FSymbolTable& F, const PivotalStructure& P);

struct QuadrupleDualResult {
    bool solvable = false;
    std::optional<std::vector<Scalar>> witness;
    std::optional<int> distinguished_label;
};

/// Solves q_i q_j = (tau^{ij}_k)^2 q_k. The first candidate tried is
/// q_i = tau^{i i*}_1 Tr_{i*}(1) / Tr_i(1), which needs no root extraction.
QuadrupleDualResult quadruple_dual_check(const FSymbolTable& F);
bool quadruple_witness_valid(const FSymbolTable& F, const DoubleDualGauge& g, const std::vector<Scalar>& q);

} // namespace tckit
