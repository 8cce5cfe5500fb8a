#pragma once

#include <vector>

#include "kcone/cones.hpp"

namespace kcone::detail {

std::size_t integer_rank(std::vector<IntegerVector> rows);

}  // namespace kcone::detail
