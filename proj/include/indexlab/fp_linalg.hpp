#pragma once

#include <vector>

#include "indexlab/integer.hpp"

namespace indexlab {

using FpVector = std::vector<Integer>;
using FpRows = std::vector<FpVector>;

/// Basis (residues in [0, p)) of { v : v * A = 0 } over F_p, A given by rows.
FpRows left_kernel_mod(const FpRows& a, std::size_t cols, const Integer& p);

/// Rank over F_p of the row span.
std::size_t rank_mod(FpRows rows, const Integer& p);

/// Reduced row echelon basis of the row span over F_p.
FpRows row_space_mod(FpRows rows, const Integer& p);

}  // namespace indexlab
