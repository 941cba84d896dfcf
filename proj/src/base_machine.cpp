#include "gaplab/gapcore/base_machine.hpp"

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

BaseMachine BaseMachine::from_table(std::string name, Domain domain, NatPoly time_bound,
                                    std::map<std::string, ChoiceTree> trees) {
  auto table = std::make_shared<std::map<std::string, ChoiceTree>>(std::move(trees));
  TreeFn fn = [table](const std::string& x) -> ChoiceTree {
    auto it = table->find(x);
    if (it == table->end())
      throw DomainError("machine table has no tree for input \"" + x + "\"");
    return it->second;
  };
  return BaseMachine(std::move(name), std::move(domain), std::move(time_bound),
                     std::move(fn));
}

ChoiceTree BaseMachine::tree(const std::string& x) const {
  if (!domain_.contains(x))
    throw DomainError("input \"" + x + "\" outside machine domain of " + name_);
  return semantics_(x);
}

std::optional<std::string> BaseMachine::check_time_bound() const {
  for (const std::string& x : domain_.enumerate()) {
    if (tree(x).depth() > time_bound_.eval(x.size())) return x;
  }
  return std::nullopt;
}

}  // namespace gaplab::gapcore
