#include "lclab/partitions.hpp"

#include "lclab/arith_fn.hpp"
#include "lclab/parallel.hpp"
#include "lclab/triangle.hpp"

#include <algorithm>
#include <mutex>

namespace lclab {

PartitionStream::PartitionStream(unsigned n) : parts_(std::max(n, 1u), 1u) {
  if (n == 0) return;
  parts_[0] = n;
  count_ = 1;
  last_big_ = n > 1 ? 0 : static_cast<std::size_t>(-1);
}

bool PartitionStream::next() {
  // Each step lowers the last part r > 1 to r - 1 and redistributes the
  // freed units, plus the trailing ones, into parts of size <= r - 1.
  if (count_ == 0 || last_big_ == static_cast<std::size_t>(-1)) return false;
  std::size_t h = last_big_;
  if (parts_[h] == 2) {
    parts_[h] = 1;
    ++count_;
    last_big_ = h == 0 ? static_cast<std::size_t>(-1) : h - 1;
    return true;
  }
  const unsigned r = parts_[h] - 1;
  std::size_t t = count_ - h;  // units to redistribute after position h
  parts_[h] = r;
  while (t >= r) {
    ++h;
    parts_[h] = r;
    t -= r;
  }
  if (t == 0) {
    count_ = h + 1;
  } else {
    count_ = h + 2;
    parts_[h + 1] = static_cast<unsigned>(t);
    if (t > 1) ++h;
  }
  last_big_ = h;
  if (parts_[last_big_] == 1) last_big_ = static_cast<std::size_t>(-1);
  return true;
}

void for_each_partition(unsigned n, const std::function<void(std::span<const unsigned>)>& fn) {
  PartitionStream stream(n);
  do {
    fn(stream.parts());
  } while (stream.next());
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const unsigned> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

Partition conjugate(std::span<const unsigned> parts) {
  if (parts.empty()) return {};
  Partition out(parts.front(), 0);
  for (unsigned part : parts) {
    for (unsigned j = 0; j < part; ++j) ++out[j];
  }
  return out;
}

HookMultiset hook_lengths(std::span<const unsigned> parts) {
  const Partition conj = conjugate(parts);
  HookMultiset hooks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts[i]; ++j) {
      hooks.push_back(static_cast<unsigned>((parts[i] - j - 1) + (conj[j] - i - 1) + 1));
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

namespace {

// Adds prod_h (x + h^2) / prod_h h^2 for one partition into sum.
void accumulate_partition(std::span<const unsigned> parts, std::vector<Integer>& product,
                          std::vector<Rational>& sum) {
  const HookMultiset hooks = hook_lengths(parts);
  product.assign(hooks.size() + 1, Integer(0));
  product[0] = 1;
  Integer denom = 1;
  std::size_t degree = 0;
  for (unsigned h : hooks) {
    const unsigned long sq = static_cast<unsigned long>(h) * h;
    ++degree;
    for (std::size_t i = degree; i >= 1; --i) {
      product[i] *= sq;
      product[i] += product[i - 1];
    }
    product[0] *= sq;
    denom *= sq;
  }
  for (std::size_t i = 0; i < product.size(); ++i) sum[i] += make_rational(product[i], denom);
}

}  // namespace

Poly nekrasov_okounkov_poly(unsigned n, unsigned jobs) {
  const unsigned workers = std::max(1u, jobs);
  std::vector<std::vector<Rational>> partial(workers, std::vector<Rational>(n + 1));
  parallel_for(workers, workers, [&](std::size_t w) {
    std::vector<Integer> product;
    std::size_t index = 0;
    for_each_partition(n, [&](std::span<const unsigned> parts) {
      if (index++ % workers == w) accumulate_partition(parts, product, partial[w]);
    });
  });
  std::vector<Rational> total(n + 1);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i <= n; ++i) total[i] += p[i];
  }
  return Poly(std::move(total));
}

CheckReport check_no_identity(unsigned n_max, unsigned jobs) {
  CheckReport report{.name = "no-identity"};
  const Triangle darcais = build_triangle(ArithFn::sigma(), HKind::kId, n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    ++report.comparisons;
    const Poly hook_side = nekrasov_okounkov_poly(n, jobs);
    const Poly shifted = taylor_shift(row_poly(darcais, n), Rational(1));
    if (hook_side != shifted) {
      std::size_t m = 0;
      while (hook_side[m] == shifted[m]) ++m;
      report.fail({n, m}, "Q_n and P_n^{sigma,id}(x+1) differ at x^" + std::to_string(m) + ": " +
                              to_string(hook_side[m]) + " vs " + to_string(shifted[m]));
    }
  }
  return report;
}

}  // namespace lclab
