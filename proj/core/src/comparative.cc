#include "vdsolve/comparative.h"

#include <algorithm>
#include <vector>

#include "vdsolve/errors.h"

namespace vds {
namespace {

IntervalUnion SeparableSet(const VerifStructure& m, const std::string& name,
                           const Rational& s) {
  if (const Message* msg = m.Find(name)) return msg->support.ComplementInUnit();
  return IntervalUnion({Interval::Point(s)}).ComplementInUnit();
}

std::vector<Rational> ComparisonGrid(const VerifStructure& a,
                                     const VerifStructure& b) {
  std::vector<Rational> base = a.SupportEndpoints();
  const std::vector<Rational> more = b.SupportEndpoints();
  base.insert(base.end(), more.begin(), more.end());
  base.emplace_back(0);
  base.emplace_back(1);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<Rational> grid;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i > 0) grid.push_back(Midpoint(base[i - 1], base[i]));
    grid.push_back(base[i]);
  }
  return grid;
}

}  // namespace

OrderVerdict GeqLc(const VerifStructure& hi, const VerifStructure& lo) {
  const LowestConsistentSet l_hi = ComputeLowestConsistentSet(hi);
  const LowestConsistentSet l_lo = ComputeLowestConsistentSet(lo);
  OrderVerdict verdict;
  if (l_hi.IncludesAll(l_lo)) return verdict;
  verdict.holds = false;
  if (l_lo.all_of_unit_interval) {
    std::vector<Rational> points = l_hi.types;
    points.emplace_back(1);
    // 0 is always lowest-consistent, so points[0] = 0 < points[1].
    const auto gap = std::adjacent_find(points.begin(), points.end(),
                                        std::not_equal_to<>());
    verdict.type_witness = Midpoint(*gap, *(gap + 1));
  } else {
    for (const Rational& s : l_lo.types) {
      if (!l_hi.Contains(s)) {
        verdict.type_witness = s;
        break;
      }
    }
  }
  return verdict;
}

OrderVerdict GeqSep(const VerifStructure& hi, const VerifStructure& lo) {
  OrderVerdict verdict;
  for (const Rational& s : ComparisonGrid(hi, lo)) {
    std::vector<IntervalUnion> hi_sets;
    for (const std::string& name : MessagesAt(hi, s)) {
      hi_sets.push_back(SeparableSet(hi, name, s));
    }
    for (const std::string& name : MessagesAt(lo, s)) {
      IntervalUnion set = SeparableSet(lo, name, s);
      if (std::find(hi_sets.begin(), hi_sets.end(), set) == hi_sets.end()) {
        verdict.holds = false;
        verdict.separation_witness = SeparationWitness{s, name, std::move(set)};
        return verdict;
      }
    }
  }
  return verdict;
}

bool IsSenderOptimal(const VerifStructure& m) {
  return m.full_verifiability();
}

bool IsReceiverOptimal(const VerifStructure& m) {
  const LowestConsistentSet l = ComputeLowestConsistentSet(m);
  return !l.all_of_unit_interval &&
         l.types == std::vector<Rational>{Rational(0), Rational(1)};
}

SeparatingInstance MakeSeparatingInstance(const VerifStructure& hi,
                                          const VerifStructure& lo) {
  const OrderVerdict verdict = GeqLc(hi, lo);
  if (verdict.holds) {
    throw PreconditionError(
        "no separating instance: the higher structure's lowest-consistent "
        "set already contains the lower one's");
  }
  const Rational s_star = *verdict.type_witness;
  const StepFunction v({Rational(0), s_star}, {Rational(0), Rational(1)});
  const Rational prior = s_star / Rational(2);
  GameSpec game_hi(v, prior, hi);
  GameSpec game_lo(v, prior, lo);
  Rational value_hi = EquilibriumValue(game_hi).value;
  Rational value_lo = EquilibriumValue(game_lo).value;
  return {s_star, std::move(game_hi), std::move(game_lo), std::move(value_hi),
          std::move(value_lo)};
}

}  // namespace vds
