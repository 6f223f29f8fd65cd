#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tckit/fsymbols.hpp"

namespace tckit {

struct BuiltinInfo {
    std::string name;
    std::string description;
};

/// Fixed names plus the parameterized family "vec_g:<group>[:<k>]" where
/// <group> is "z<n>" or a product such as "z2xz2", and k selects the
/// standard cocycle a,b,c -> zeta_n^(k a [b + c >= n]) on a single cyclic group.
std::vector<BuiltinInfo> builtin_list();

/// A validated, pentagon-checked table. The default field is the smallest
/// one holding the data; overrides must contain the needed roots of unity.
FSymbolTable builtin(const std::string& name, std::optional<FieldSpec> field = std::nullopt);

/// Vect[G, omega]: omega is indexed by (a * n + b) * n + c for the group table.
FSymbolTable pointed_category(const std::vector<std::vector<int>>& table, const std::vector<Scalar>& omega,
                              const FieldSpec& field, std::vector<std::string> labels = {});

/// An element of exact multiplicative order n in the field, if any.
std::optional<Scalar> primitive_root_of_unity(const FieldSpec& field, std::uint64_t n);

} // namespace tckit
