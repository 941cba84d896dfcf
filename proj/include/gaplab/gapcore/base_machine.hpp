#ifndef GAPLAB_GAPCORE_BASE_MACHINE_HPP_
#define GAPLAB_GAPCORE_BASE_MACHINE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "gaplab/domain.hpp"
#include "gaplab/gapcore/choice_tree.hpp"
#include "gaplab/natpoly.hpp"

namespace gaplab::gapcore {

// Bounded nondeterministic machine: a total map from domain inputs to choice
// trees, with a declared time bound. Plays the role of the polynomial-time
// machine N behind acc/rej/gap semantics.
class BaseMachine {
 public:
  using TreeFn = std::function<ChoiceTree(const std::string&)>;

  BaseMachine(std::string name, Domain domain, NatPoly time_bound, TreeFn semantics)
      : name_(std::move(name)),
        domain_(std::move(domain)),
        time_bound_(std::move(time_bound)),
        semantics_(std::move(semantics)) {}

  // Machine backed by an explicit input -> tree table (the serializable form).
  static BaseMachine from_table(std::string name, Domain domain, NatPoly time_bound,
                                std::map<std::string, ChoiceTree> trees);

  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  const NatPoly& time_bound() const { return time_bound_; }

  // The computation tree on input x. Throws DomainError for inputs outside
  // the declared domain.
  ChoiceTree tree(const std::string& x) const;

  // Checks depth(tree(x)) <= t(|x|) for every domain input; returns the first
  // offending input, nullopt if none.
  std::optional<std::string> check_time_bound() const;

 private:
  std::string name_;
  Domain domain_;
  NatPoly time_bound_;
  TreeFn semantics_;
};

using BaseMachinePtr = std::shared_ptr<const BaseMachine>;

}  // namespace gaplab::gapcore

#endif  // GAPLAB_GAPCORE_BASE_MACHINE_HPP_
