#ifndef GAPLAB_IO_DSL_HPP_
#define GAPLAB_IO_DSL_HPP_

#include <string>

#include "gaplab/gapcore/gap_program.hpp"
#include "gaplab/gapcore/target_spec.hpp"
#include "gaplab/io/sexpr.hpp"

namespace gaplab::io {

// Text DSL for gap programs and target specs. Grammar (atoms lowercase):
//
//   poly    := (poly c0 c1 ...)            ; c0 + c1 n + c2 n^2 + ...
//            | (rpoly c)                   ; n^c + c
//   domain  := (domain ALPHABET MAXLEN)    ; e.g. (domain "01" 6)
//   strfunc := (chain STEP ...)            ; first | zerofill | zero-first
//                                          ; | repair-inner
//   fp      := (int V) | (len) | (idx)
//            | (neg FP) | (add FP FP) | (sub FP FP) | (mul FP FP)
//            | (table ((KEY V) ...))
//            | (table ((KEY V) ...) (default V))
//            | (apply FP STRFUNC)
//            | (iprod FP POLY FROM RANGEOF) ; FROM: from0|from1
//                                           ; RANGEOF: input|first
//   tree    := accept | reject | (choice TREE TREE)
//   machine := (machine NAME DOMAIN POLY ((INPUT TREE) ...))
//   gap     := (base MACHINE) | (const DOMAIN FP)
//            | (neg GAP) | (add GAP GAP) | (sub GAP GAP) | (mul GAP GAP)
//            | (prod DOMAIN POLY FROM GAP)
//            | (compose DOMAIN STRFUNC GAP)
//   tspec   := (target-spec MODE DOMAIN POLY FP) ; MODE: length|input
//   twospec := (two-sided TSPEC TSPEC)           ; accept, then reject

NatPoly poly_from_sexpr(const SExpr& e);
SExpr poly_to_sexpr(const NatPoly& p);

Domain domain_from_sexpr(const SExpr& e);
SExpr domain_to_sexpr(const Domain& d);

gapcore::StrFunc strfunc_from_sexpr(const SExpr& e);
SExpr strfunc_to_sexpr(const gapcore::StrFunc& f);

gapcore::FpFunc fpfunc_from_sexpr(const SExpr& e);
SExpr fpfunc_to_sexpr(const gapcore::FpFunc& f);

gapcore::ChoiceTree tree_from_sexpr(const SExpr& e);
SExpr tree_to_sexpr(const gapcore::ChoiceTree& t);

gapcore::GapProgram gap_program_from_sexpr(const SExpr& e);
// Base machines are written as explicit input -> tree tables; machines with
// procedural semantics are materialized over their domain first (bounded by
// `max_table`, a resource guard).
SExpr gap_program_to_sexpr(const gapcore::GapProgram& g, std::size_t max_table = 4096);

gapcore::TargetSpec target_spec_from_sexpr(const SExpr& e);
SExpr target_spec_to_sexpr(const gapcore::TargetSpec& spec);

gapcore::TwoSidedTargetSpec two_sided_from_sexpr(const SExpr& e);
SExpr two_sided_to_sexpr(const gapcore::TwoSidedTargetSpec& spec);

// File-level helpers: parse the single program / spec in `text`, which may
// be either form for specs (target-spec or two-sided).
gapcore::GapProgram parse_gap_program(const std::string& text);
std::string print_gap_program(const gapcore::GapProgram& g);

struct ParsedSpec {
  bool two_sided = false;
  gapcore::TargetSpec single;
  gapcore::TwoSidedTargetSpec both;
};
ParsedSpec parse_spec_file(const std::string& text);

}  // namespace gaplab::io

#endif  // GAPLAB_IO_DSL_HPP_
