#ifndef GAPLAB_POLYENC_PRIMES_HPP_
#define GAPLAB_POLYENC_PRIMES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/polyenc/multilinear.hpp"

namespace gaplab::polyenc {

bool is_prime(std::uint64_t n);
// Primes in [lo, hi], inclusive both ends.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);
// pi(n), the number of primes <= n.
std::uint64_t prime_count(std::uint64_t n);

// The prime-count lower bound pi(n) > n / ln n, stated for n >= 17.
struct PrimeBoundResult {
  std::uint64_t pi_n = 0;
  double lower_bound = 0.0;  // n / ln n
  bool bound_holds = false;
};
PrimeBoundResult prime_bound_check(std::uint64_t n);

// Divisor lemma checker: for a multilinear s over N variables with
// deg(s) < p, p prime, p <= N/2, s(0,...,0) = 0 and s constant on every 0/1
// point of weight p, the slice value is divisible by p. Verifies each
// hypothesis by enumeration (budgeted at `max_points` weight-p points) and,
// when they all hold, returns the slice value with p | val established.
struct PrimeDivisorResult {
  bool hypotheses_hold = false;
  std::string failed_hypothesis;  // set when !hypotheses_hold
  BigInt val;                     // the constant slice value when they hold
};

PrimeDivisorResult check_prime_divisor(const MultilinearPoly& s, std::uint64_t p,
                                       int num_vars,
                                       std::uint64_t max_points = 1000000);

}  // namespace gaplab::polyenc

#endif  // GAPLAB_POLYENC_PRIMES_HPP_
