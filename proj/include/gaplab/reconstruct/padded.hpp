#ifndef GAPLAB_RECONSTRUCT_PADDED_HPP_
#define GAPLAB_RECONSTRUCT_PADDED_HPP_

#include <cstdint>
#include <utility>

#include "gaplab/bigint.hpp"
#include "gaplab/domain.hpp"
#include "gaplab/gapcore/fp_func.hpp"
#include "gaplab/gapcore/target_spec.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::reconstruct {

// Length-padding helper around a positive length-indexed function h: the
// deck length n is data-dependent, so the pipeline multiplies by the h
// values of every other length to reach a function of the input length
// alone:
//
//   hhat(0^m) = prod_{0<=i<=m} h(0^i)
//   hprime    = prod_{0<=i<=m, i != n} h(0^i)
//
// giving the padding identity h(0^n) * hprime = hhat(0^m).
struct PaddedTarget {
  gapcore::FpFunc h;  // evaluated on unary strings 0^i
  Domain domain;

  BigInt h_at(std::size_t i) const { return h.eval(domain.zeroes(i), domain); }
  BigInt hhat(std::size_t m) const;
  BigInt hprime(std::size_t m, std::size_t n) const;
};

// (hhat(0^m), hprime) for input length m and deck length n <= m.
std::pair<BigInt, BigInt> padded_targets(const gapcore::FpFunc& h,
                                         std::size_t input_length, std::size_t n,
                                         const Domain& domain);

// Embedding of multiplied targets into indexed targets: the produced target
// function is f2(<0^n, i>) = i * f1(0^n) with multiplicity r. Throws InvalidSpecError
// if f1 vanishes anywhere on the domain's lengths.
gapcore::TargetSpec multiplied_to_indexed(const gapcore::FpFunc& f1, const NatPoly& r,
                                          const Domain& domain);

}  // namespace gaplab::reconstruct

#endif  // GAPLAB_RECONSTRUCT_PADDED_HPP_
