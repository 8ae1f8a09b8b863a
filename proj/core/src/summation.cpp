#include "unirank/summation.hpp"

namespace unirank {

double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum sum;
  for (double v : values) sum += v;
  return sum.value();
}

}  // namespace unirank
