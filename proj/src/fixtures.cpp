#include "gaplab/fixtures.hpp"

#include <utility>

#include <algorithm>

#include "gaplab/gapcore/choice_tree.hpp"

namespace gaplab::fixtures {

using gapcore::BaseMachine;
using gapcore::ChoiceTree;
using gapcore::FpFunc;
using gapcore::GapProgram;
using gapcore::RangeFrom;
using gapcore::StrFunc;
using gapcore::StrStep;
using gapcore::TargetMode;
using gapcore::TargetSpec;

BigInt rand_nonzero(Rng& rng, int magnitude) {
  int v = rand_int(rng, 1, magnitude);
  return rand_int(rng, 0, 1) ? BigInt(v) : BigInt(-v);
}

ChoiceTree random_choice_tree(Rng& rng, int max_depth) {
  if (max_depth == 0 || rand_int(rng, 0, 2) == 0)
    return ChoiceTree::leaf(rand_int(rng, 0, 1) == 1);
  return ChoiceTree::choice(random_choice_tree(rng, max_depth - 1),
                            random_choice_tree(rng, max_depth - 1));
}

BaseMachine random_base_machine(Rng& rng, const Domain& dom, int max_depth,
                                const std::string& name) {
  std::map<std::string, ChoiceTree> trees;
  for (const std::string& x : dom.enumerate())
    trees.emplace(x, random_choice_tree(rng, max_depth));
  return BaseMachine::from_table(name, dom, NatPoly::constant(max_depth),
                                 std::move(trees));
}

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Machine whose per-input tree is derived from a seed; total on any domain
// without materializing a table (paired positions have huge domains).
BaseMachine random_hash_machine(Rng& rng, const Domain& dom, int max_depth,
                                const std::string& name) {
  const std::uint64_t seed = rng();
  BaseMachine::TreeFn fn = [seed, max_depth](const std::string& x) {
    Rng local(fnv1a(x, seed));
    return random_choice_tree(local, max_depth);
  };
  return BaseMachine(name, dom, NatPoly::constant(max_depth), std::move(fn));
}

}  // namespace

namespace {

FpFunc random_closed_fp(Rng& rng) {
  // Affine form a*|x| + b; total on every domain, paired positions included.
  switch (rand_int(rng, 0, 2)) {
    case 0:
      return FpFunc::constant(BigInt(rand_int(rng, -5, 5)));
    case 1:
      return FpFunc::add(FpFunc::mul(FpFunc::constant(BigInt(rand_int(rng, -2, 2))),
                                     FpFunc::input_len()),
                         FpFunc::constant(BigInt(rand_int(rng, -3, 3))));
    default:
      return FpFunc::sub(FpFunc::input_len(), FpFunc::constant(BigInt(rand_int(rng, 0, 4))));
  }
}

}  // namespace

GapProgram random_gap_program(Rng& rng, const Domain& dom, int depth) {
  if (depth <= 0 || rand_int(rng, 0, 3) == 0) {
    // Leaf: a machine gap or an FP constant.
    if (rand_int(rng, 0, 1) == 0) {
      static int counter = 0;
      return GapProgram::base(random_hash_machine(
          rng, dom, rand_int(rng, 1, 3), "m" + std::to_string(counter++)));
    }
    return GapProgram::const_fp(random_closed_fp(rng), dom);
  }
  switch (rand_int(rng, 0, 5)) {
    case 0:
      return GapProgram::neg(random_gap_program(rng, dom, depth - 1));
    case 1:
      return GapProgram::add(random_gap_program(rng, dom, depth - 1),
                             random_gap_program(rng, dom, depth - 1));
    case 2:
      return GapProgram::sub(random_gap_program(rng, dom, depth - 1),
                             random_gap_program(rng, dom, depth - 1));
    case 3:
      return GapProgram::mul(random_gap_program(rng, dom, depth - 1),
                             random_gap_program(rng, dom, depth - 1));
    case 4: {
      // Child lives on paired inputs over the same alphabet.
      const NatPoly q = NatPoly::constant(rand_int(rng, 0, 3));
      const Domain pair_dom{dom.alphabet, 2 * dom.max_len + 1 + 3};
      GapProgram child = random_gap_program(rng, pair_dom, depth - 1);
      return gapcore::poly_product(std::move(child), q, dom,
                                   rand_int(rng, 0, 1) ? RangeFrom::kOne
                                                       : RangeFrom::kZero);
    }
    default:
      return GapProgram::compose_fp(random_gap_program(rng, dom, depth - 1),
                                    StrFunc::zero_fill(), dom);
  }
}

namespace {

polyenc::QTree random_qtree(Rng& rng, const std::vector<std::string>& universe,
                            std::vector<std::string> used, int budget) {
  using polyenc::QTree;
  const int roll = rand_int(rng, 0, 9);
  if (budget == 0 || roll < 3) return rand_int(rng, 0, 1) ? QTree::accept() : QTree::reject();
  if (roll < 7 && used.size() < universe.size()) {
    std::string w;
    do {
      w = universe[static_cast<std::size_t>(rand_int(
          rng, 0, static_cast<int>(universe.size()) - 1))];
    } while (std::find(used.begin(), used.end(), w) != used.end());
    used.push_back(w);
    return QTree::query(w, random_qtree(rng, universe, used, budget - 1),
                        random_qtree(rng, universe, used, budget - 1));
  }
  return QTree::choice(random_qtree(rng, universe, used, budget - 1),
                       random_qtree(rng, universe, used, budget - 1));
}

}  // namespace

polyenc::OracleMachine random_oracle_machine(Rng& rng, int m, int depth,
                                             const std::string& name) {
  std::vector<std::string> universe;
  for (int i = 0; i < m; ++i) universe.push_back("u" + std::to_string(i));
  polyenc::QTree tree = random_qtree(rng, universe, {}, depth);
  return polyenc::OracleMachine(name, NatPoly::constant(static_cast<std::uint64_t>(depth)),
                                std::move(universe), {{"", tree}});
}

PromiseInstance random_promise_instance(Rng& rng, const Domain& dom, TargetMode mode,
                                        const NatPoly& multiplicity, bool realize_g) {
  PromiseInstance inst;
  inst.spec.mode = mode;
  inst.spec.domain = dom;
  inst.spec.multiplicity = multiplicity;

  // Target table keyed by the exact paired strings the spec will probe.
  std::map<std::string, BigInt> targets;
  auto fill_targets = [&](const std::string& base) {
    const std::uint64_t r = multiplicity.eval(base.size());
    for (std::uint64_t i = 1; i <= r; ++i)
      targets[pair_encode(base, i, dom)] = rand_nonzero(rng, 9);
  };
  if (mode == TargetMode::kLengthIndexed) {
    for (std::size_t len = 0; len <= dom.max_len; ++len) fill_targets(dom.zeroes(len));
  } else {
    for (const std::string& x : dom.enumerate()) fill_targets(x);
  }
  inst.spec.target = FpFunc::table(targets);

  // Gap table honoring the promise.
  std::map<std::string, BigInt> gap_table;
  for (const std::string& x : dom.enumerate()) {
    const std::uint64_t r = multiplicity.eval(x.size());
    if (rand_int(rng, 0, 1) == 1 && r >= 1) {
      const std::uint64_t i =
          static_cast<std::uint64_t>(rand_int(rng, 1, static_cast<int>(r)));
      const std::string base =
          mode == TargetMode::kLengthIndexed ? dom.zeroes(x.size()) : x;
      gap_table[x] = targets.at(pair_encode(base, i, dom));
      inst.accepted.insert(x);
    } else {
      gap_table[x] = 0;
    }
  }
  GapProgram g = GapProgram::const_fp(FpFunc::table(std::move(gap_table)), dom);
  inst.g = realize_g ? GapProgram::base(gapcore::realize(g)) : g;
  return inst;
}

TwoSidedInstance random_two_sided_instance(Rng& rng, const Domain& dom,
                                           const NatPoly& r_accept,
                                           const NatPoly& r_reject) {
  TwoSidedInstance inst;
  std::map<std::string, BigInt> fa_table, fr_table;
  // Per length: values for the A-list, then R-values outside the A-set.
  std::map<std::size_t, std::vector<BigInt>> a_lists, r_lists;
  for (std::size_t len = 0; len <= dom.max_len; ++len) {
    const std::string zeros = dom.zeroes(len);
    std::set<BigInt> a_set;
    for (std::uint64_t i = 1; i <= r_accept.eval(len); ++i) {
      // Zero is a legal two-sided target; only disjointness matters.
      BigInt v = BigInt(rand_int(rng, -9, 9));
      fa_table[pair_encode(zeros, i, dom)] = v;
      a_set.insert(v);
      a_lists[len].push_back(v);
    }
    for (std::uint64_t j = 1; j <= r_reject.eval(len); ++j) {
      BigInt v;
      do {
        v = BigInt(rand_int(rng, -9, 9));
      } while (a_set.count(v));
      fr_table[pair_encode(zeros, j, dom)] = v;
      r_lists[len].push_back(v);
    }
  }
  inst.spec.accept.mode = TargetMode::kLengthIndexed;
  inst.spec.accept.domain = dom;
  inst.spec.accept.target = FpFunc::table(std::move(fa_table));
  inst.spec.accept.multiplicity = r_accept;
  inst.spec.reject.mode = TargetMode::kLengthIndexed;
  inst.spec.reject.domain = dom;
  inst.spec.reject.target = FpFunc::table(std::move(fr_table));
  inst.spec.reject.multiplicity = r_reject;

  std::map<std::string, BigInt> gap_table;
  for (const std::string& x : dom.enumerate()) {
    const auto& a = a_lists[x.size()];
    const auto& r = r_lists[x.size()];
    if (rand_int(rng, 0, 1) == 1) {
      gap_table[x] = a[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(a.size()) - 1))];
      inst.accepted.insert(x);
    } else {
      gap_table[x] = r[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(r.size()) - 1))];
    }
  }
  inst.g = GapProgram::const_fp(FpFunc::table(std::move(gap_table)), dom);
  return inst;
}

CeqpInstance random_ceqp_instance(Rng& rng, const Domain& dom,
                                  const NatPoly& multiplicity) {
  CeqpInstance inst;
  static int counter = 0;
  auto machine = std::make_shared<const BaseMachine>(
      random_base_machine(rng, dom, 3, "ceqp" + std::to_string(counter++)));
  inst.machine = machine;

  std::map<std::string, BigInt> targets;
  for (const std::string& x : dom.enumerate()) {
    const BigInt acc = gapcore::enumerate_paths(machine->tree(x)).acc;
    const std::uint64_t r = multiplicity.eval(x.size());
    // Plant acc at one random index on about half the inputs; the rest of
    // the list is arbitrary integers (zero allowed for exact counting), so
    // accidental hits still count as membership.
    const std::uint64_t plant =
        rand_int(rng, 0, 1) == 1 && r >= 1
            ? static_cast<std::uint64_t>(rand_int(rng, 1, static_cast<int>(r)))
            : 0;
    bool member = false;
    for (std::uint64_t i = 1; i <= r; ++i) {
      const BigInt v = i == plant ? acc : BigInt(rand_int(rng, -3, 8));
      targets[pair_encode(x, i, dom)] = v;
      if (v == acc) member = true;
    }
    if (member) inst.members.insert(x);
  }
  inst.spec.mode = TargetMode::kInputIndexed;
  inst.spec.domain = dom;
  inst.spec.target = FpFunc::table(std::move(targets));
  inst.spec.multiplicity = multiplicity;
  return inst;
}

namespace {

using polyenc::QTree;

QTree fanout(std::vector<QTree> subtrees) {
  while (subtrees.size() > 1) {
    std::vector<QTree> next;
    for (std::size_t i = 0; i + 1 < subtrees.size(); i += 2)
      next.push_back(QTree::choice(subtrees[i], subtrees[i + 1]));
    if (subtrees.size() % 2) next.push_back(subtrees.back());
    subtrees = std::move(next);
  }
  return subtrees.empty() ? QTree::reject() : subtrees[0];
}

}  // namespace

std::vector<std::string> binary_strings(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    std::string w(n, '0');
    for (std::size_t k = 0; k < n; ++k)
      if ((v >> (n - 1 - k)) & 1ull) w[k] = '1';
    out.push_back(w);
  }
  return out;
}

polyenc::OracleMachine counting_gap_machine(std::size_t n) {
  std::vector<QTree> subs;
  for (const std::string& w : binary_strings(n))
    subs.push_back(QTree::query(
        w, QTree::accept(), QTree::choice(QTree::accept(), QTree::reject())));
  return polyenc::OracleMachine("count-gap", NatPoly::constant(n + 2),
                                binary_strings(n),
                                {{std::string(n, '0'), fanout(std::move(subs))}});
}

polyenc::OracleMachine counting_acc_machine(std::size_t n) {
  std::vector<QTree> subs;
  for (const std::string& w : binary_strings(n))
    subs.push_back(QTree::query(w, QTree::accept(), QTree::reject()));
  return polyenc::OracleMachine("count-acc", NatPoly::constant(n + 2),
                                binary_strings(n),
                                {{std::string(n, '0'), fanout(std::move(subs))}});
}

polyenc::OracleMachine constant_machine(std::size_t n, int acc, int rej) {
  std::vector<QTree> subs;
  for (int i = 0; i < acc; ++i) subs.push_back(QTree::accept());
  for (int i = 0; i < rej; ++i) subs.push_back(QTree::reject());
  return polyenc::OracleMachine("const", NatPoly::constant(4), binary_strings(n),
                                {{std::string(n, '0'), fanout(std::move(subs))}});
}

polyenc::OracleMachine successor_machine(std::size_t n) {
  auto strings = binary_strings(n);
  std::vector<QTree> subs;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const std::string& w = strings[i];
    const std::string& succ = strings[(i + 1) % strings.size()];
    subs.push_back(QTree::query(
        w, QTree::query(succ, QTree::reject(), QTree::accept()), QTree::reject()));
  }
  return polyenc::OracleMachine("succ", NatPoly::constant(n + 2), strings,
                                {{std::string(n, '0'), fanout(std::move(subs))}});
}

polyenc::OracleMachine three_path_machine(std::size_t n) {
  auto strings = binary_strings(n);
  std::vector<QTree> subs;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const std::string& w = strings[i];
    const std::string& partner = strings[(i + 1) % strings.size()];
    QTree on_yes = QTree::choice(
        QTree::choice(QTree::accept(),
                      QTree::query(partner, QTree::reject(), QTree::accept())),
        QTree::choice(QTree::query(partner, QTree::reject(), QTree::accept()),
                      QTree::reject()));
    subs.push_back(QTree::query(w, on_yes, QTree::reject()));
  }
  return polyenc::OracleMachine("three", NatPoly::constant(n + 4), strings,
                                {{std::string(n, '0'), fanout(std::move(subs))}});
}

polyenc::OracleMachine scan_machine(std::size_t n) {
  QTree tree = QTree::reject();
  auto strings = binary_strings(n);
  for (auto it = strings.rbegin(); it != strings.rend(); ++it)
    tree = QTree::query(*it, QTree::accept(), tree);
  return polyenc::OracleMachine("scan", NatPoly::constant(1ull << n), strings,
                                {{std::string(n, '0'), tree}});
}

}  // namespace gaplab::fixtures
