#pragma once

#include <vector>

#include "netfield/solver.hpp"

namespace netfield::detail {

/// Rows plus the d2 smallest encodings outside `forbidden` (sorted).
Assignment complete_witness(const FieldSpec& field, const GeneralParams& params,
                            std::vector<std::vector<Elem>> rows, const std::vector<Elem>& forbidden);

/// Same, forbidding the signed product set of the rows.
Assignment complete_witness(const FieldSpec& field, const GeneralParams& params,
                            std::vector<std::vector<Elem>> rows);

}  // namespace netfield::detail
