#ifndef GAPLAB_GAPCORE_GAP_PROGRAM_HPP_
#define GAPLAB_GAPCORE_GAP_PROGRAM_HPP_

#include <cstdint>
#include <memory>
#include <string>

#include "gaplab/bigint.hpp"
#include "gaplab/domain.hpp"
#include "gaplab/gapcore/base_machine.hpp"
#include "gaplab/gapcore/fp_func.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::gapcore {

// Symbolic algebra term denoting an integer-valued gap function, built from
// machines, FP functions and the GapP closure combinators. Every term has a
// machine realization with the same gap on every domain input.
class GapProgram {
 public:
  enum class Kind : std::uint8_t {
    kBase,       // gap of a machine
    kConstFP,    // value of an FP function (FP is contained in GapP)
    kNeg,
    kAdd,
    kSub,
    kMul,
    kPolyProd,   // prod over i of child(<x, i>), i ranging to q(|x|)
    kComposeFP,  // child evaluated at transform(x)
  };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Kind kind;
    Domain domain;            // declared input domain of this term
    BaseMachinePtr machine;   // kBase
    FpFunc fp;                // kConstFP
    NodePtr a, b;             // children
    NatPoly range;            // kPolyProd
    RangeFrom from = RangeFrom::kOne;  // kPolyProd
    StrFunc transform;        // kComposeFP
  };

  GapProgram() = default;

  static GapProgram base(BaseMachinePtr machine);
  static GapProgram base(BaseMachine machine);
  static GapProgram const_fp(FpFunc f, Domain domain);
  static GapProgram neg(GapProgram a);
  static GapProgram add(GapProgram a, GapProgram b);
  static GapProgram sub(GapProgram a, GapProgram b);
  static GapProgram mul(GapProgram a, GapProgram b);
  // Child must accept paired inputs <x, i>; outer_domain is the domain of the
  // product term itself.
  static GapProgram poly_prod(GapProgram child, NatPoly range, RangeFrom from,
                              Domain outer_domain);
  static GapProgram compose_fp(GapProgram child, StrFunc transform, Domain outer_domain);

  bool empty() const { return node_ == nullptr; }
  const NodePtr& node() const { return node_; }
  const Domain& domain() const;

  // Exact gap value at input x; checks x against the declared domain.
  BigInt eval(const std::string& x) const;

 private:
  explicit GapProgram(NodePtr node) : node_(std::move(node)) {}
  BigInt eval_raw(const std::string& x) const;
  NodePtr node_;
};

// gap_N(x) = acc_N(x) - rej_N(x) for the program's realized or base machine.
BigInt eval_gap(const GapProgram& prog, const std::string& x);

// Closure-property product combinator: the returned program evaluates to
// prod_{i} child(<x, i>) with i ranging over the chosen inclusive range,
// 1..q(|x|) by default or 0..q(|x|) with RangeFrom::kZero.
GapProgram poly_product(GapProgram child, NatPoly q, Domain outer_domain,
                        RangeFrom from = RangeFrom::kOne);

// Compiles the program into a single machine whose per-input choice tree has
// exactly the program's gap: negation swaps leaf labels, addition roots a
// fresh choice, multiplication grafts the second tree at every leaf of the
// first, constants become unbalanced-leaf chains, and index products fold
// the multiplication over the range.
BaseMachine realize(const GapProgram& prog);

// The #P-to-GapP embedding: a machine whose gap equals acc of the given
// machine (every rejecting leaf is replaced by a balanced choice).
GapProgram acc_as_gap(BaseMachinePtr machine);

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_GAP_PROGRAM_HPP_
