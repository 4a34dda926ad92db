#include "annulus/indexed_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace annulus {

IndexedSeries::IndexedSeries(int first, int last) : first_(first), last_(last) {
  if (last < first - 1) throw std::invalid_argument("IndexedSeries: last < first - 1");
  values_.assign(static_cast<std::size_t>(last - first + 1), Complex{});
}

double IndexedSeries::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

void IndexedSeries::fill(Complex v) { std::fill(values_.begin(), values_.end(), v); }

IndexedSeries& IndexedSeries::operator+=(const IndexedSeries& other) {
  if (other.first_ != first_ || other.last_ != last_) throw std::invalid_argument("IndexedSeries: index ranges differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

}  // namespace annulus
