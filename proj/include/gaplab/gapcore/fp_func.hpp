#ifndef GAPLAB_GAPCORE_FP_FUNC_HPP_
#define GAPLAB_GAPCORE_FP_FUNC_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/domain.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::gapcore {

// Deterministic polynomial-time string transform, written as a pipeline of
// primitive steps. These are the string-valued FP functions the closure
// constructions compose machines and target functions with.
enum class StrStep : std::uint8_t {
  kPairFirst,    // <y,i>      -> y
  kZeroFill,     // x          -> 0^|x|
  kZeroFirst,    // <y,i>      -> <0^|y|, i>
  kRepairInner,  // <<y,i>, j> -> <y, j>
};

class StrFunc {
 public:
  StrFunc() = default;
  explicit StrFunc(std::vector<StrStep> steps) : steps_(std::move(steps)) {}

  static StrFunc identity() { return StrFunc(); }
  static StrFunc pair_first() { return StrFunc({StrStep::kPairFirst}); }
  static StrFunc zero_fill() { return StrFunc({StrStep::kZeroFill}); }
  static StrFunc zero_first() { return StrFunc({StrStep::kZeroFirst}); }

  StrFunc then(StrStep next) const;

  std::string apply(const std::string& x, const Domain& dom) const;
  const std::vector<StrStep>& steps() const { return steps_; }

 private:
  std::vector<StrStep> steps_;
};

// Which range bound an indexed product reads: r(|x|) for the whole input, or
// r(|y|) for the first component of a pair input <y,i>.
enum class RangeOf : std::uint8_t { kInput, kFirst };
// Inclusive lower bound of an indexed range. The closure property uses
// 0 <= i <= q(|x|); the collapse proofs use 1 <= i <= r(|x|).
enum class RangeFrom : std::uint8_t { kZero, kOne };

// Integer-valued FP function over input strings: a small closed expression
// tree (tables, length/index extraction, ring arithmetic, bounded index
// products, composition with string transforms). Closed so it can be
// serialized and replayed.
class FpFunc {
 public:
  enum class Kind : std::uint8_t {
    kConst,
    kInputLen,   // |x|
    kPairIndex,  // i where x = <y,i>
    kTable,      // lookup by exact input string
    kNeg,
    kAdd,
    kSub,
    kMul,
    kApply,         // child evaluated at strfunc(x)
    kIndexProduct,  // prod_{i=from}^{r(|base|)} child(<x, i>)
  };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Kind kind;
    BigInt value;                          // kConst
    std::map<std::string, BigInt> table;   // kTable
    std::optional<BigInt> table_default;   // kTable
    NodePtr a, b;                          // children
    StrFunc transform;                     // kApply
    NatPoly range;                         // kIndexProduct
    RangeFrom from = RangeFrom::kOne;      // kIndexProduct
    RangeOf range_of = RangeOf::kInput;    // kIndexProduct
  };

  FpFunc() = default;

  static FpFunc constant(BigInt v);
  static FpFunc input_len();
  static FpFunc pair_index();
  static FpFunc table(std::map<std::string, BigInt> entries,
                      std::optional<BigInt> fallback = std::nullopt);
  static FpFunc neg(FpFunc a);
  static FpFunc add(FpFunc a, FpFunc b);
  static FpFunc sub(FpFunc a, FpFunc b);
  static FpFunc mul(FpFunc a, FpFunc b);
  static FpFunc apply(FpFunc a, StrFunc transform);
  static FpFunc index_product(FpFunc child, NatPoly range, RangeFrom from,
                              RangeOf range_of = RangeOf::kInput);

  bool empty() const { return node_ == nullptr; }
  const NodePtr& node() const { return node_; }

  // Exact evaluation at input x. Throws DomainError on missing table keys or
  // pair extraction from non-pair inputs.
  BigInt eval(const std::string& x, const Domain& dom) const;

 private:
  explicit FpFunc(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_FP_FUNC_HPP_
