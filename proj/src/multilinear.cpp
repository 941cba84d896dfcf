#include "gaplab/polyenc/multilinear.hpp"

#include <bit>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::polyenc {

OracleAssignment OracleAssignment::from_mask(std::uint32_t mask, int num_vars) {
  OracleAssignment a;
  a.bits.resize(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i)
    a.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return a;
}

MultilinearPoly::MultilinearPoly(int num_vars, std::vector<SignedMonomial> factored)
    : num_vars_(num_vars), factored_(std::move(factored)) {
  // Normal-form terms are keyed by 32-bit subset masks.
  if (num_vars < 0 || num_vars > 31)
    throw ResourceError("multilinear polynomials support at most 31 variables");
}

MultilinearPoly MultilinearPoly::from_normal_form(
    int num_vars, const std::map<std::uint32_t, BigInt>& terms) {
  // One signed monomial per coefficient unit keeps the two forms pointwise
  // equal; fine for the small coefficients this is used with.
  std::vector<SignedMonomial> monomials;
  for (const auto& [mask, coeff] : terms) {
    if (coeff == 0) continue;
    SignedMonomial mono;
    mono.sign = coeff > 0 ? 1 : -1;
    for (int i = 0; i < num_vars; ++i)
      if ((mask >> i) & 1u) mono.literals.push_back({i, true});
    for (BigInt k = abs(coeff); k > 0; --k) monomials.push_back(mono);
  }
  MultilinearPoly p(num_vars, std::move(monomials));
  p.normal_ = terms;
  // Drop zero coefficients for a clean canonical form.
  for (auto it = p.normal_->begin(); it != p.normal_->end();)
    it = it->second == 0 ? p.normal_->erase(it) : std::next(it);
  return p;
}

const std::map<std::uint32_t, BigInt>& MultilinearPoly::normal_form() const {
  if (normal_) return *normal_;
  std::map<std::uint32_t, BigInt> terms;
  for (const SignedMonomial& mono : factored_) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal& lit : mono.literals)
      (lit.positive ? pos : neg) |= 1u << lit.var;
    // prod y_P prod (1-y_N) = sum over S subset of N of (-1)^|S| y_(P|S).
    std::uint32_t s = neg;
    while (true) {
      const int parity = std::popcount(s) % 2 == 0 ? 1 : -1;
      terms[pos | s] += mono.sign * parity;
      if (s == 0) break;
      s = (s - 1) & neg;
    }
  }
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  normal_ = std::move(terms);
  return *normal_;
}

BigInt MultilinearPoly::eval(const OracleAssignment& a) const {
  if (static_cast<int>(a.size()) != num_vars_)
    throw DomainError("assignment length " + std::to_string(a.size()) +
                      " does not match " + std::to_string(num_vars_) + " variables");
  BigInt total = 0;
  for (const SignedMonomial& mono : factored_) {
    int value = mono.sign;
    for (const Literal& lit : mono.literals) {
      const int bit = a.bits[static_cast<std::size_t>(lit.var)];
      const int lit_value = lit.positive ? bit : 1 - bit;
      if (lit_value == 0) {
        value = 0;
        break;
      }
    }
    total += value;
  }
  return total;
}

BigInt MultilinearPoly::eval_normal(const OracleAssignment& a) const {
  if (static_cast<int>(a.size()) != num_vars_)
    throw DomainError("assignment length mismatch");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits[i]) mask |= 1u << i;
  BigInt total = 0;
  for (const auto& [vars, coeff] : normal_form())
    if ((vars & mask) == vars) total += coeff;
  return total;
}

int MultilinearPoly::degree() const {
  int deg = 0;
  for (const auto& [vars, coeff] : normal_form())
    deg = std::max(deg, std::popcount(vars));
  return deg;
}

MultilinearPoly encode(const OracleMachine& m, const std::string& x) {
  const int num_vars = static_cast<int>(m.universe().size());
  std::vector<SignedMonomial> monomials;
  for (const SignedPath& sp : valid_paths(m, x)) {
    SignedMonomial mono;
    mono.sign = sp.sign;
    for (const std::string& w : sp.path.qplus) {
      const int idx = m.universe_index(w);
      if (idx < 0)
        throw EncodingError("path queries \"" + w + "\" outside the universe");
      mono.literals.push_back({idx, true});
    }
    for (const std::string& w : sp.path.qminus) {
      const int idx = m.universe_index(w);
      if (idx < 0)
        throw EncodingError("path queries \"" + w + "\" outside the universe");
      mono.literals.push_back({idx, false});
    }
    monomials.push_back(std::move(mono));
  }
  return MultilinearPoly(num_vars, std::move(monomials));
}

BigInt eval_poly(const MultilinearPoly& p, const OracleAssignment& a) {
  return p.eval(a);
}

EncodingReport verify_encoding(const OracleMachine& m, const std::string& x,
                               int max_universe) {
  const int num_vars = static_cast<int>(m.universe().size());
  if (num_vars > max_universe)
    throw ResourceError("universe of " + std::to_string(num_vars) +
                        " strings exceeds the brute-force bound " +
                        std::to_string(max_universe));
  const MultilinearPoly p = encode(m, x);

  EncodingReport report;
  report.degree = p.degree();
  report.degree_bound = m.time_bound().eval(x.size());
  report.degree_ok = static_cast<std::uint64_t>(report.degree) <= report.degree_bound;

  for (std::uint32_t mask = 0; mask < (1u << num_vars); ++mask) {
    std::set<std::string> oracle;
    for (int i = 0; i < num_vars; ++i)
      if ((mask >> i) & 1u) oracle.insert(m.universe()[static_cast<std::size_t>(i)]);
    const BigInt got = p.eval(OracleAssignment::from_mask(mask, num_vars));
    const BigInt expect = oracle_gap(m, oracle, x);
    ++report.oracles_checked;
    if (got != expect) report.mismatches.push_back({mask, got, expect});
  }
  return report;
}

}  // namespace gaplab::polyenc
