#ifndef GAPLAB_POLYENC_MULTILINEAR_HPP_
#define GAPLAB_POLYENC_MULTILINEAR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/bigint.hpp"
#include "gaplab/polyenc/oracle_machine.hpp"

namespace gaplab::polyenc {

// Literal y_i (positive) or (1 - y_i) (negated) over variable index i.
struct Literal {
  int var = 0;
  bool positive = true;
  bool operator==(const Literal& o) const {
    return var == o.var && positive == o.positive;
  }
};

// sign * product of literals; one monomial per valid computation path.
struct SignedMonomial {
  int sign = 1;
  std::vector<Literal> literals;
};

// 0/1 characteristic vector of an oracle over the machine's universe.
struct OracleAssignment {
  std::vector<std::uint8_t> bits;

  static OracleAssignment from_mask(std::uint32_t mask, int num_vars);
  std::size_t size() const { return bits.size(); }
};

// Signed-monomial polynomial over query-indicator variables. The factored
// form is the list of path monomials; the normal form maps variable subsets
// to integer coefficients. Expansion can be exponential in the literals per
// monomial, so the normal form is computed lazily and cached; evaluation
// prefers the factored form, which is linear in the path count.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  MultilinearPoly(int num_vars, std::vector<SignedMonomial> factored);

  // Polynomial given directly by its normal form coefficients (subset mask
  // -> coefficient); the factored form is synthesized from the terms.
  static MultilinearPoly from_normal_form(int num_vars,
                                          const std::map<std::uint32_t, BigInt>& terms);

  int num_vars() const { return num_vars_; }
  const std::vector<SignedMonomial>& factored() const { return factored_; }
  const std::map<std::uint32_t, BigInt>& normal_form() const;

  // Exact evaluation of the factored form; throws DomainError on an
  // assignment length mismatch.
  BigInt eval(const OracleAssignment& a) const;
  // Evaluation of the expanded normal form (used to cross-check).
  BigInt eval_normal(const OracleAssignment& a) const;

  // Total degree of the normal form (0 for the zero polynomial).
  int degree() const;

 private:
  int num_vars_ = 0;
  std::vector<SignedMonomial> factored_;
  mutable std::optional<std::map<std::uint32_t, BigInt>> normal_;
};

// Polynomial encoding of machine M on input x: one signed monomial per valid
// path, literal y_i for every yes-answered universe string x_i and (1 - y_i)
// for every no-answered one. Throws EncodingError if a path queries outside
// the declared universe.
MultilinearPoly encode(const OracleMachine& m, const std::string& x);

BigInt eval_poly(const MultilinearPoly& p, const OracleAssignment& a);

// Exhaustive soundness check of the encoding over all 2^m oracles: the
// polynomial at the oracle's characteristic vector must equal the machine's
// oracle-resolved gap, and deg(p) <= t(|x|). m above `max_universe` is a
// resource error (default 14).
struct EncodingMismatch {
  std::uint32_t oracle_mask = 0;
  BigInt poly_value;
  BigInt machine_gap;
};

struct EncodingReport {
  std::uint64_t oracles_checked = 0;
  int degree = 0;
  std::uint64_t degree_bound = 0;
  bool degree_ok = true;
  std::vector<EncodingMismatch> mismatches;
  bool ok() const { return degree_ok && mismatches.empty(); }
};

EncodingReport verify_encoding(const OracleMachine& m, const std::string& x,
                               int max_universe = 14);

}  // namespace gaplab::polyenc

#endif  // GAPLAB_POLYENC_MULTILINEAR_HPP_
