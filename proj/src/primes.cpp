#include "gaplab/polyenc/primes.hpp"

#include <cmath>
#include <stdexcept>

#include "gaplab/errors.hpp"

namespace gaplab::polyenc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Sieve of Eratosthenes up to `limit`, grown on demand.
const std::vector<bool>& sieve_upto(std::uint64_t limit) {
  static std::vector<bool> composite{true, true};  // 0 and 1
  if (composite.size() <= limit) {
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    composite.assign(n, false);
    composite[0] = true;
    if (n > 1) composite[1] = true;
    for (std::size_t p = 2; p * p < n; ++p) {
      if (composite[p]) continue;
      for (std::size_t q = p * p; q < n; q += p) composite[q] = true;
    }
  }
  return composite;
}

}  // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  const auto& composite = sieve_upto(hi);
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
    if (!composite[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

std::uint64_t prime_count(std::uint64_t n) {
  if (n < 2) return 0;
  const auto& composite = sieve_upto(n);
  std::uint64_t count = 0;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (!composite[static_cast<std::size_t>(k)]) ++count;
  return count;
}

PrimeBoundResult prime_bound_check(std::uint64_t n) {
  PrimeBoundResult res;
  res.pi_n = prime_count(n);
  res.lower_bound = static_cast<double>(n) / std::log(static_cast<double>(n));
  res.bound_holds = static_cast<double>(res.pi_n) > res.lower_bound;
  return res;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - i + 1) / i;
  return result;
}

}  // namespace

PrimeDivisorResult check_prime_divisor(const MultilinearPoly& s, std::uint64_t p,
                                       int num_vars, std::uint64_t max_points) {
  PrimeDivisorResult res;
  if (num_vars != s.num_vars()) {
    res.failed_hypothesis = "polynomial is not over N variables";
    return res;
  }
  const std::uint64_t n = static_cast<std::uint64_t>(num_vars);
  if (!is_prime(p)) {
    res.failed_hypothesis = "p is not prime";
    return res;
  }
  if (2 * p > n) {
    res.failed_hypothesis = "p exceeds N/2";
    return res;
  }
  if (static_cast<std::uint64_t>(s.degree()) >= p) {
    res.failed_hypothesis = "deg(s) is not below p";
    return res;
  }
  if (s.eval(OracleAssignment::from_mask(0, num_vars)) != 0) {
    res.failed_hypothesis = "s does not vanish at the origin";
    return res;
  }
  if (binomial(n, p) > max_points)
    throw ResourceError("weight-" + std::to_string(p) + " slice of " +
                        std::to_string(binomial(n, p)) +
                        " points exceeds the enumeration budget");

  // Walk all weight-p masks (Gosper's hack) and demand a constant value.
  bool first = true;
  std::uint32_t mask = (1u << p) - 1u;
  const std::uint32_t limit = 1u << num_vars;
  while (mask < limit) {
    const BigInt value = s.eval(OracleAssignment::from_mask(mask, num_vars));
    if (first) {
      res.val = value;
      first = false;
    } else if (value != res.val) {
      res.failed_hypothesis = "s is not constant on the weight-p slice";
      return res;
    }
    // Next mask with the same popcount.
    const std::uint32_t c = mask & (~mask + 1u);
    const std::uint32_t r = mask + c;
    const std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
    if (next <= mask) break;
    mask = next;
  }

  res.hypotheses_hold = true;
  // The lemma guarantees divisibility once the hypotheses hold; anything
  // else would be a checker bug.
  if (res.val % BigInt(p) != 0)
    throw std::logic_error("prime divisor lemma violated: p = " + std::to_string(p) +
                           ", val = " + res.val.str());
  return res;
}

}  // namespace gaplab::polyenc
