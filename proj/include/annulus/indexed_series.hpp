#pragma once

#include <complex>
#include <span>
#include <vector>

namespace annulus {

using Complex = std::complex<double>;

/// Complex values addressed by a signed harmonic index k in [first, last].
class IndexedSeries {
 public:
  IndexedSeries() = default;
  IndexedSeries(int first, int last);

  [[nodiscard]] int first() const { return first_; }
  [[nodiscard]] int last() const { return last_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool contains(int k) const { return k >= first_ && k <= last_; }

  Complex& operator[](int k) { return values_[static_cast<std::size_t>(k - first_)]; }
  const Complex& operator[](int k) const { return values_[static_cast<std::size_t>(k - first_)]; }

  /// Zero outside the stored range.
  [[nodiscard]] Complex value_or_zero(int k) const { return contains(k) ? (*this)[k] : Complex{}; }

  [[nodiscard]] std::span<const Complex> values() const { return values_; }
  [[nodiscard]] std::span<Complex> values() { return values_; }

  [[nodiscard]] double max_abs() const;
  void fill(Complex v);

  IndexedSeries& operator+=(const IndexedSeries& other);

  friend bool operator==(const IndexedSeries&, const IndexedSeries&) = default;

 private:
  int first_ = 0;
  int last_ = -1;
  std::vector<Complex> values_;
};

}  // namespace annulus
