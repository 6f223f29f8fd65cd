#pragma once

#include <random>

#include "tckit/fsymbols.hpp"

namespace tckit {

/// Small-height random nonzero element of the field.
Scalar random_nonzero_scalar(const FieldSpec& f, std::mt19937_64& rng);

/// Random gauge on every non-unit admissible vertex.
GaugeTable random_gauge(const FSymbolTable& F, std::mt19937_64& rng);

} // namespace tckit
