#include "orlicz/corpus.hpp"

#include <algorithm>
#include <random>

#include "orlicz/composition.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

double draw_value(std::mt19937_64& rng) {
  constexpr std::uint64_t kSteps = std::uint64_t{1} << 20;
  const double u = static_cast<double>(uniform_below(rng, kSteps)) / static_cast<double>(kSteps);
  const double magnitude = 0.1 + 4.9 * u;
  return uniform_below(rng, 2) == 0 ? magnitude : -magnitude;
}

}  // namespace

std::vector<FunctionSpec> simple_corpus(std::uint64_t seed, std::size_t count, const MeasureSpace& space,
                                        std::int64_t max_element) {
  std::mt19937_64 rng(seed);
  std::vector<FunctionSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pieces = 1 + uniform_below(rng, 4);
    std::vector<fn::Piece> parts;
    if (!space.is_counting()) {
      std::vector<int> ends;
      while (ends.size() < 2 * pieces) {
        const int e = static_cast<int>(uniform_below(rng, 81)) - 40;
        if (std::find(ends.begin(), ends.end(), e) == ends.end()) ends.push_back(e);
      }
      std::sort(ends.begin(), ends.end());
      for (std::size_t j = 0; j < pieces; ++j) {
        parts.push_back({IntervalUnion({{ends[2 * j] / 4.0, ends[2 * j + 1] / 4.0}}), draw_value(rng)});
      }
    } else {
      std::int64_t top = max_element;
      if (space.kind == SpaceKind::counting_finite) top = std::min(top, space.size);
      if (top < static_cast<std::int64_t>(pieces)) throw ArgumentError("simple_corpus: element range too small");
      std::vector<std::int64_t> used;
      for (std::size_t j = 0; j < pieces; ++j) {
        const std::size_t card = 1 + uniform_below(rng, 5);
        std::vector<std::int64_t> elems;
        for (std::size_t tries = 0; elems.size() < card && tries < 64; ++tries) {
          const auto e = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(top)));
          if (std::find(used.begin(), used.end(), e) == used.end()) {
            used.push_back(e);
            elems.push_back(e);
          }
        }
        if (!elems.empty()) parts.push_back({IntegerSet(std::move(elems)), draw_value(rng)});
      }
    }
    out.push_back(FunctionSpec::simple(std::move(parts)));
  }
  return out;
}

}  // namespace orlicz
