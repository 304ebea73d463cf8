#pragma once

// Slow, direct implementations used as independent references in tests.

#include <cstdint>
#include <vector>

#include "lclab/poly.hpp"
#include "lclab/rational.hpp"

namespace lclab::oracle {

inline Integer divisor_sum(std::uint64_t n, unsigned k) {
  Integer total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer term = 1;
    for (unsigned i = 0; i < k; ++i) term *= static_cast<unsigned long>(d);
    total += term;
  }
  return total;
}

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// p(0..n) by counting partitions with parts added one size at a time.
inline std::vector<Integer> partition_counts(std::size_t n) {
  std::vector<Integer> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t i = part; i <= n; ++i) p[i] += p[i - part];
  }
  return p;
}

// P_n(x) = x/h(n) * sum_{k=1}^n g(k) P_{n-k}(x), straight from the definition.
template <class G, class H>
std::vector<Poly> polynomial_family(G g, H h, std::size_t n_max) {
  std::vector<Poly> out;
  out.push_back(Poly::constant(1));
  const Poly x = Poly::monomial(1, 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Poly acc;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(g(k)) * out[n - k];
    out.push_back((Rational(1) / Rational(h(n))) * (acc * x));
  }
  return out;
}

}  // namespace lclab::oracle
