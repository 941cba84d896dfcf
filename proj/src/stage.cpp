#include "gaplab/diag/stage.hpp"

#include <algorithm>
#include <functional>

#include "gaplab/errors.hpp"

namespace gaplab::diag {

DetMachine::NodePtr DetMachine::leaf(BigInt value) {
  auto n = std::make_shared<Node>();
  n->is_leaf = true;
  n->value = std::move(value);
  return n;
}

DetMachine::NodePtr DetMachine::query(std::string w, NodePtr yes, NodePtr no) {
  auto n = std::make_shared<Node>();
  n->is_leaf = false;
  n->query = std::move(w);
  n->yes = std::move(yes);
  n->no = std::move(no);
  return n;
}

DetMachine::RunResult DetMachine::run(const std::set<std::string>& oracle) const {
  RunResult res;
  NodePtr node = root_;
  while (!node->is_leaf) {
    res.queried.insert(node->query);
    node = oracle.count(node->query) ? node->yes : node->no;
  }
  res.value = node->value;
  return res;
}

bool test_language_member(const std::set<std::string>& b, std::size_t n) {
  return std::any_of(b.begin(), b.end(),
                     [n](const std::string& w) { return w.size() == n; });
}

std::uint64_t StageContext::p_at_stage() const {
  return std::max(n_machine.time_bound().eval(n_j), m_machine.time_bound().eval(n_j));
}

std::vector<std::string> StageContext::candidates() const {
  if (n_j > 24)
    throw ResourceError("candidate space 2^" + std::to_string(n_j) +
                        " too large to enumerate");
  std::vector<std::string> out;
  // All binary strings of length n_j, lexicographic, minus T.
  const std::uint64_t total = 1ull << n_j;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::string w(n_j, '0');
    for (std::size_t k = 0; k < n_j; ++k)
      if ((v >> (n_j - 1 - k)) & 1ull) w[k] = '1';
    if (!t.count(w)) out.push_back(w);
  }
  return out;
}

StageContext make_stage_context(polyenc::OracleMachine n_machine, DetMachine m_machine,
                                std::size_t n_j, std::set<std::string> b_prev,
                                NatPoly r) {
  StageContext ctx{std::move(n_machine), std::move(m_machine), n_j,
                   std::move(b_prev),    {},                   0,
                   std::move(r)};
  auto run = ctx.m_machine.run(ctx.b_prev);
  ctx.val = run.value;
  for (const std::string& w : run.queried)
    if (w.size() == n_j) ctx.t.insert(w);
  return ctx;
}

namespace {

// Search over C = empty, size-1, size-2, ..., in lexicographic order within
// a size; calls test(C) and returns the first hit. Budget counts candidate
// evaluations.
std::optional<std::set<std::string>> search_subsets(
    const std::vector<std::string>& pool, std::uint64_t max_size, std::uint64_t budget,
    const std::function<bool(const std::set<std::string>&)>& test) {
  std::uint64_t used = 0;
  auto check = [&](const std::set<std::string>& c) -> bool {
    if (++used > budget) throw ResourceError("stage search budget exceeded");
    return test(c);
  };
  if (check({})) return std::set<std::string>{};
  const std::size_t n = pool.size();
  max_size = std::min<std::uint64_t>(max_size, n);
  std::vector<std::size_t> idx;
  for (std::uint64_t size = 1; size <= max_size; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    while (true) {
      std::set<std::string> c;
      for (std::size_t k : idx) c.insert(pool[k]);
      if (check(c)) return c;
      // Next combination in lexicographic order.
      std::size_t k = static_cast<std::size_t>(size);
      while (k-- > 0) {
        if (idx[k] + (size - k) < n) {
          ++idx[k];
          for (std::size_t j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (k == 0) goto next_size;
      }
    }
  next_size:;
  }
  return std::nullopt;
}

std::set<std::string> with_union(const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

std::optional<std::set<std::string>> gap_stage_search(const StageContext& ctx,
                                                      std::uint64_t budget) {
  if (ctx.val == 0)
    throw DomainError("stage value must be nonzero (zero-valued stages skip ahead)");
  const std::string input = ctx.input();
  return search_subsets(
      ctx.candidates(), ctx.r.eval(ctx.n_j), budget,
      [&](const std::set<std::string>& c) {
        const BigInt gap = polyenc::oracle_gap(ctx.n_machine, with_union(ctx.b_prev, c),
                                               input);
        return c.empty() ? gap != 0 : gap != ctx.val;
      });
}

std::optional<std::set<std::string>> acc_stage_search(const StageContext& ctx,
                                                      std::uint64_t budget) {
  if (ctx.val == 0)
    throw DomainError("stage value must be nonzero (zero-valued stages skip ahead)");
  const std::string input = ctx.input();
  return search_subsets(
      ctx.candidates(), 2, budget, [&](const std::set<std::string>& c) {
        const BigInt acc = polyenc::oracle_acc(ctx.n_machine, with_union(ctx.b_prev, c),
                                               input);
        return c.empty() ? acc != 0 : acc != ctx.val;
      });
}

bool confirm_gap_stage(const StageContext& ctx, const std::set<std::string>& c) {
  for (const std::string& w : c)
    if (w.size() != ctx.n_j || ctx.t.count(w)) return false;
  const BigInt gap =
      polyenc::oracle_gap(ctx.n_machine, with_union(ctx.b_prev, c), ctx.input());
  if (c.empty()) return gap != 0;
  return c.size() <= ctx.r.eval(ctx.n_j) && gap != ctx.val;
}

bool confirm_acc_stage(const StageContext& ctx, const std::set<std::string>& c) {
  for (const std::string& w : c)
    if (w.size() != ctx.n_j || ctx.t.count(w)) return false;
  const BigInt acc =
      polyenc::oracle_acc(ctx.n_machine, with_union(ctx.b_prev, c), ctx.input());
  if (c.empty()) return acc != 0;
  return c.size() <= 2 && acc != ctx.val;
}

StageConditions gap_stage_conditions(const StageContext& ctx,
                                     const std::optional<PrevStage>& prev) {
  StageConditions cond;
  cond.p_nj = ctx.p_at_stage();
  if (prev) cond.a = ctx.n_j > prev->p_prev.eval(prev->n_prev);
  const BigInt p(cond.p_nj);
  const BigInt p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  cond.b = BigInt(ctx.r.eval(ctx.n_j)) >= p4;
  cond.c = (BigInt(1) << ctx.n_j) - p >= 2 * p4;
  cond.d = p3 - p >= p2;
  return cond;
}

StageConditions acc_stage_conditions(const StageContext& ctx,
                                     const std::optional<PrevStage>& prev) {
  StageConditions cond;
  cond.p_nj = ctx.p_at_stage();
  if (prev) cond.a = ctx.n_j > prev->p_prev.eval(prev->n_prev);
  const BigInt p(cond.p_nj);
  cond.b = (BigInt(1) << ctx.n_j) - p > 6 * p + 1;
  return cond;
}

}  // namespace gaplab::diag
