#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orlicz/measure.hpp"

namespace orlicz {

/// Seeded Simple functions with 1 to 4 pieces. On the line the pieces are
/// disjoint intervals with endpoints on the grid k/4, |k| <= 40; on counting
/// spaces they are disjoint subsets of {1, ..., max_element}. Values lie in
/// [0.1, 5] with random sign.
std::vector<FunctionSpec> simple_corpus(std::uint64_t seed, std::size_t count, const MeasureSpace& space,
                                        std::int64_t max_element = 60);

}  // namespace orlicz
