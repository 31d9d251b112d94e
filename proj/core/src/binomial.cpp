#include "koszul/binomial.hpp"

namespace koszul {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw argument_error("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // r stays exact at every step: after step i, r = C(n-k+i, i).
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > ~std::uint64_t{0})
      throw resource_error("binomial(" + std::to_string(n) + "," +
                           std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::int64_t signed_binomial(std::int64_t x, std::int64_t k) {
  if (k < 0) throw argument_error("signed_binomial: negative k");
  // x(x-1)...(x-k+1)/k!, numerator accumulated before division so the
  // division is exact.
  __int128 num = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (x - i);
    __int128 bound = static_cast<__int128>(1) << 100;
    if (num > bound || num < -bound)
      throw resource_error("signed_binomial overflow at x=" + std::to_string(x));
  }
  __int128 den = 1;
  for (std::int64_t i = 2; i <= k; ++i) den *= i;
  __int128 v = num / den;
  if (v > INT64_MAX || v < INT64_MIN)
    throw resource_error("signed_binomial exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

BinomialTable::BinomialTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw argument_error("BinomialTable: negative size");
  rows_.assign(static_cast<std::size_t>(max_n + 1) * (max_n + 2) / 2, 0);
  for (int n = 0; n <= max_n; ++n) {
    std::size_t base = static_cast<std::size_t>(n) * (n + 1) / 2;
    rows_[base] = 1;
    rows_[base + n] = 1;
    for (int k = 1; k < n; ++k) {
      std::uint64_t a = at(n - 1, k - 1), b = at(n - 1, k);
      std::uint64_t s = a + b;
      rows_[base + k] = (a == kOverflow || b == kOverflow || s < a) ? kOverflow : s;
    }
  }
}

}  // namespace koszul
