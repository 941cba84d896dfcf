#include "gaplab/gapcore/verify.hpp"

#include <algorithm>
#include <set>

#include "gaplab/errors.hpp"

namespace gaplab::gapcore {

std::string to_string(CountingClass cls) {
  switch (cls) {
    case CountingClass::kLWPP: return "LWPP";
    case CountingClass::kRLWPP: return "rLWPP";
    case CountingClass::kWPP: return "WPP";
    case CountingClass::kRWPP: return "rWPP";
    case CountingClass::kTwoSided: return "twoSided";
    case CountingClass::kCeqP: return "CeqP";
  }
  return "?";
}

namespace {

bool contains_value(const std::vector<BigInt>& values, const BigInt& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

void check_indexed(const GapProgram& g, const TargetSpec& spec,
                   const LanguageOracle& language, bool single,
                   VerifyReport& report) {
  for (const std::string& x : g.domain().enumerate()) {
    ++report.inputs_checked;
    const BigInt gap = g.eval(x);
    std::vector<BigInt> targets;
    if (single) {
      targets.push_back(spec.target_at(x, 1));
    } else {
      targets = spec.targets_for(x);
    }
    const bool accepted = language(x);
    if (accepted) {
      bool zero_target = contains_value(targets, 0);
      if (zero_target)
        report.violations.push_back({x, gap, targets, "zero-target-in-list"});
      if (!contains_value(targets, gap))
        report.violations.push_back({x, gap, targets, "accepted-gap-misses-target"});
    } else if (gap != 0) {
      report.violations.push_back({x, gap, {BigInt(0)}, "rejected-gap-nonzero"});
    }
  }
}

void check_two_sided(const GapProgram& g, const TwoSidedTargetSpec& spec,
                     const LanguageOracle& language, VerifyReport& report) {
  // Per-length list disjointness is part of the class definition.
  const Domain& dom = g.domain();
  for (std::size_t len = 0; len <= dom.max_len; ++len) {
    const std::string zeros = dom.zeroes(len);
    std::set<BigInt> a_vals;
    for (const BigInt& v : spec.accept.targets_for(zeros)) a_vals.insert(v);
    for (const BigInt& v : spec.reject.targets_for(zeros)) {
      if (a_vals.count(v)) {
        report.violations.push_back(
            {zeros, v, {}, "acceptance-and-rejection-lists-overlap"});
        break;
      }
    }
  }
  for (const std::string& x : dom.enumerate()) {
    ++report.inputs_checked;
    const BigInt gap = g.eval(x);
    if (language(x)) {
      auto targets = spec.accept.targets_for(x);
      if (!contains_value(targets, gap))
        report.violations.push_back({x, gap, targets, "accepted-gap-misses-a-list"});
    } else {
      auto targets = spec.reject.targets_for(x);
      if (!contains_value(targets, gap))
        report.violations.push_back({x, gap, targets, "rejected-gap-misses-r-list"});
    }
  }
}

void check_ceqp(const GapProgram& g, const LanguageOracle& language,
                VerifyReport& report) {
  for (const std::string& x : g.domain().enumerate()) {
    ++report.inputs_checked;
    const BigInt gap = g.eval(x);
    const bool member = language(x);
    if (member && gap != 0)
      report.violations.push_back({x, gap, {BigInt(0)}, "member-gap-nonzero"});
    if (!member && gap == 0)
      report.violations.push_back({x, gap, {}, "nonmember-gap-zero"});
  }
}

}  // namespace

VerifyReport verify_class_membership(
    const GapProgram& g, const std::variant<TargetSpec, TwoSidedTargetSpec>& spec,
    const LanguageOracle& language, CountingClass cls) {
  VerifyReport report;
  report.cls = cls;
  switch (cls) {
    case CountingClass::kLWPP:
    case CountingClass::kWPP:
    case CountingClass::kRLWPP:
    case CountingClass::kRWPP: {
      const auto* ts = std::get_if<TargetSpec>(&spec);
      if (!ts) throw InvalidSpecError("this class takes a single-list target spec");
      const bool single =
          cls == CountingClass::kLWPP || cls == CountingClass::kWPP;
      const bool length_indexed =
          cls == CountingClass::kLWPP || cls == CountingClass::kRLWPP;
      const bool spec_length_indexed = ts->mode == TargetMode::kLengthIndexed;
      if (length_indexed != spec_length_indexed)
        throw InvalidSpecError("target spec mode does not match class " +
                               to_string(cls));
      check_indexed(g, *ts, language, single, report);
      break;
    }
    case CountingClass::kTwoSided: {
      const auto* two = std::get_if<TwoSidedTargetSpec>(&spec);
      if (!two) throw InvalidSpecError("twoSided takes a two-sided target spec");
      check_two_sided(g, *two, language, report);
      break;
    }
    case CountingClass::kCeqP:
      check_ceqp(g, language, report);
      break;
  }
  return report;
}

}  // namespace gaplab::gapcore
