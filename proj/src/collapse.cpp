#include "gaplab/gapcore/collapse.hpp"

#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

namespace {

// Shared body of the LWPP/WPP collapses; `zero_base` selects whether the
// target function reads <0^|x|, i> or <x, i>.
CollapsedWitness collapse_indexed(const GapProgram& g, const TargetSpec& spec,
                                  bool zero_base) {
  spec.validate_nonzero();
  const Domain dom = g.domain();
  const Domain pair_dom{dom.alphabet,
                        2 * dom.max_len + 1 +
                            static_cast<std::size_t>(spec.multiplicity.eval(dom.max_len))};

  // f read through the pairing: on <x,i> this is f(<0^|x|,i>) or f(<x,i>).
  const FpFunc f_on_pair =
      zero_base ? FpFunc::apply(spec.target, StrFunc::zero_first()) : spec.target;

  // h1(<x,i>) = f(...) - g(x), a gap program over paired inputs.
  GapProgram h1 = GapProgram::sub(
      GapProgram::const_fp(f_on_pair, pair_dom),
      GapProgram::compose_fp(g, StrFunc::pair_first(), pair_dom));

  GapProgram h2 = poly_product(std::move(h1), spec.multiplicity, dom);

  // The constant product of all listed targets, as an FP function of x.
  const FpFunc target_product =
      FpFunc::index_product(f_on_pair, spec.multiplicity, RangeFrom::kOne);

  CollapsedWitness out;
  out.ghat = GapProgram::sub(std::move(h2),
                             GapProgram::const_fp(target_product, dom));
  out.fhat = FpFunc::neg(target_product);
  return out;
}

}  // namespace

CollapsedWitness collapse_lwpp(const GapProgram& g, const TargetSpec& spec) {
  if (spec.mode != TargetMode::kLengthIndexed)
    throw InvalidSpecError("collapse_lwpp requires a length-indexed spec");
  return collapse_indexed(g, spec, /*zero_base=*/true);
}

CollapsedWitness collapse_wpp(const GapProgram& g, const TargetSpec& spec) {
  if (spec.mode != TargetMode::kInputIndexed)
    throw InvalidSpecError("collapse_wpp requires an input-indexed spec");
  return collapse_indexed(g, spec, /*zero_base=*/false);
}

TwoSidedCollapse collapse_two_sided(const GapProgram& g, const TwoSidedTargetSpec& spec) {
  spec.validate_disjoint();
  const Domain dom = g.domain();
  const NatPoly& r_r = spec.reject.multiplicity;
  const Domain pair_dom{dom.alphabet,
                        2 * dom.max_len + 1 +
                            static_cast<std::size_t>(r_r.eval(dom.max_len))};

  const FpFunc fr_on_pair = FpFunc::apply(spec.reject.target, StrFunc::zero_first());

  // ghat(x) = prod_j ( f_R(<0^|x|, j>) - g(x) ).
  GapProgram body = GapProgram::sub(
      GapProgram::const_fp(fr_on_pair, pair_dom),
      GapProgram::compose_fp(g, StrFunc::pair_first(), pair_dom));
  GapProgram ghat = poly_product(std::move(body), r_r, dom);

  // fhat(<0^l, i>) = prod_j ( f_R(<0^l, j>) - f_A(<0^l, i>) ). The product
  // pairs the whole input <0^l,i> with j, so the body re-pairs to reach
  // <0^l, j> for f_R and keeps <0^l, i> for f_A.
  const FpFunc fr_part = FpFunc::apply(
      spec.reject.target,
      StrFunc({StrStep::kRepairInner, StrStep::kZeroFirst}));
  const FpFunc fa_part = FpFunc::apply(
      spec.accept.target, StrFunc({StrStep::kPairFirst, StrStep::kZeroFirst}));
  const FpFunc fhat = FpFunc::index_product(FpFunc::sub(fr_part, fa_part), r_r,
                                            RangeFrom::kOne, RangeOf::kFirst);

  TwoSidedCollapse out;
  out.ghat = std::move(ghat);
  out.indexed.mode = TargetMode::kLengthIndexed;
  out.indexed.domain = dom;
  out.indexed.target = fhat;
  out.indexed.multiplicity = spec.accept.multiplicity;
  return out;
}

GapProgram collapse_ceqp(BaseMachinePtr acc_machine, const TargetSpec& spec) {
  if (spec.mode != TargetMode::kInputIndexed)
    throw InvalidSpecError("collapse_ceqp requires an input-indexed spec");
  const Domain dom = acc_machine->domain();
  const Domain pair_dom{dom.alphabet,
                        2 * dom.max_len + 1 +
                            static_cast<std::size_t>(spec.multiplicity.eval(dom.max_len))};

  GapProgram h1 = GapProgram::sub(
      GapProgram::const_fp(spec.target, pair_dom),
      GapProgram::compose_fp(acc_as_gap(std::move(acc_machine)), StrFunc::pair_first(),
                             pair_dom));
  return poly_product(std::move(h1), spec.multiplicity, dom);
}

BigInt exp_target_enumerator(std::uint64_t /*n*/, const BigInt& i) {
  if (i <= 0) throw DomainError("exp target enumerator requires i >= 1");
  if (i % 2 == 0) return i / 2;
  return -((i + 1) / 2);
}

}  // namespace gaplab::gapcore
