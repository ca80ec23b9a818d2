#pragma once

#include <cstdint>
#include <vector>

#include "ml/pattern.hpp"
#include "ml/xform.hpp"

namespace ml::oracle {

// A dense 0/1 table over all 2^width inputs, indexed by the bits value.
using TruthTable = std::vector<uint8_t>;

// Brute-force evaluation of a form over the whole universe. This walks the
// tree with dense tables (elementwise union/flip, pairwise OR-convolution)
// and never touches the sparse set algebra, so it is the reference the
// sparse path is checked against.
TruthTable truth_table_serial(const XForm& e, int guard = kDefaultUniverseGuard);

// Same contract, inner loops spread across OpenMP threads. Falls back to
// the serial behavior in a single-thread build.
TruthTable truth_table_parallel(const XForm& e,
                                int guard = kDefaultUniverseGuard);

Pattern table_to_pattern(const TruthTable& t, int width);

}  // namespace ml::oracle
