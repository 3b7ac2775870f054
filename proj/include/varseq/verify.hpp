#pragma once

#include "varseq/report.hpp"

namespace varseq {

/// Runs the self-check suite on one instance: the algebraic identities and
/// transform guarantees the library builds on, each evaluated exactly on
/// integer inputs and to 1e-9 relative tolerance otherwise.
std::vector<PropertyCheck> verify_instance(const Sequence& seq);

}  // namespace varseq
