#include "vdsolve/verifiability.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "vdsolve/errors.h"

namespace vds {
namespace {

constexpr std::string_view kIdentityPrefix = "id:";

std::vector<std::string> DefaultNames(std::string_view prefix,
                                      std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return names;
}

}  // namespace

VerifStructure::VerifStructure(std::vector<Message> messages,
                               bool full_verifiability)
    : messages_(std::move(messages)), full_verifiability_(full_verifiability) {
  std::set<std::string> seen;
  for (const Message& m : messages_) {
    if (m.name.empty()) throw ConstructionError("message name is empty");
    if (m.name.starts_with(kIdentityPrefix)) {
      throw ConstructionError("message name '" + m.name +
                              "' uses the reserved prefix 'id:'");
    }
    if (!seen.insert(m.name).second) {
      throw ConstructionError("duplicate message name '" + m.name + "'");
    }
    if (m.support.empty()) {
      throw ConstructionError("message '" + m.name + "' has empty support");
    }
    if (!m.support.IsLeftClosed()) {
      throw ConstructionError("support of '" + m.name +
                              "' has a piece that is not left-closed");
    }
    if (m.support.Infimum() < Rational(0) ||
        m.support.Supremum() > Rational(1)) {
      throw ConstructionError("support of '" + m.name +
                              "' leaves the unit interval");
    }
  }
  if (!full_verifiability_) {
    std::vector<Interval> all;
    for (const Message& m : messages_) {
      all.insert(all.end(), m.support.intervals().begin(),
                 m.support.intervals().end());
    }
    if (IntervalUnion(std::move(all)) != IntervalUnion::Unit()) {
      throw ConstructionError(
          "some types in [0,1] have no available message");
    }
  }
}

const Message* VerifStructure::Find(std::string_view name) const {
  for (const Message& m : messages_) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

bool VerifStructure::HasMessage(std::string_view name) const {
  if (Find(name) != nullptr) return true;
  return full_verifiability_ && ParseIdentityMessageName(name).has_value();
}

std::vector<Rational> VerifStructure::SupportEndpoints() const {
  std::vector<Rational> out;
  for (const Message& m : messages_) {
    const auto e = m.support.Endpoints();
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IdentityMessageName(const Rational& s) {
  return std::string(kIdentityPrefix) + s.ToString();
}

std::optional<Rational> ParseIdentityMessageName(std::string_view name) {
  if (!name.starts_with(kIdentityPrefix)) return std::nullopt;
  try {
    Rational s = Rational::Parse(name.substr(kIdentityPrefix.size()));
    if (!InUnitInterval(s)) return std::nullopt;
    return s;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::vector<std::string> MessagesAt(const VerifStructure& m,
                                    const Rational& s) {
  if (!InUnitInterval(s)) {
    throw DomainError("type " + s.ToString() + " outside [0,1]");
  }
  std::vector<std::string> out;
  for (const Message& msg : m.messages()) {
    if (msg.support.Contains(s)) out.push_back(msg.name);
  }
  if (m.full_verifiability()) out.push_back(IdentityMessageName(s));
  if (out.empty()) {
    throw ConstructionError("malformed structure: no message available at " +
                            s.ToString());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational MinInverse(const VerifStructure& m, std::string_view name) {
  if (const Message* msg = m.Find(name)) return *msg->support.Min();
  if (m.full_verifiability()) {
    if (auto s = ParseIdentityMessageName(name)) return *s;
  }
  throw LookupError("unknown message '" + std::string(name) + "'");
}

Interval ConvexHullOfSupport(const VerifStructure& m, std::string_view name) {
  if (const Message* msg = m.Find(name)) {
    return {msg->support.Infimum(), msg->support.Supremum(), true,
            msg->support.SupremumAttained()};
  }
  if (m.full_verifiability()) {
    if (auto s = ParseIdentityMessageName(name)) return Interval::Point(*s);
  }
  throw LookupError("unknown message '" + std::string(name) + "'");
}

bool LowestConsistentSet::Contains(const Rational& s) const {
  if (all_of_unit_interval) return InUnitInterval(s);
  return std::binary_search(types.begin(), types.end(), s);
}

bool LowestConsistentSet::IncludesAll(const LowestConsistentSet& other) const {
  if (all_of_unit_interval) return true;
  if (other.all_of_unit_interval) return false;
  return std::includes(types.begin(), types.end(), other.types.begin(),
                       other.types.end());
}

LowestConsistentSet ComputeLowestConsistentSet(const VerifStructure& m) {
  LowestConsistentSet out;
  for (const Message& msg : m.messages()) out.types.push_back(*msg.support.Min());
  std::sort(out.types.begin(), out.types.end());
  out.types.erase(std::unique(out.types.begin(), out.types.end()),
                  out.types.end());
  out.all_of_unit_interval = m.full_verifiability();
  return out;
}

Rational SkepticalTypeMap::operator()(const Rational& s) const {
  if (identity) {
    if (!InUnitInterval(s)) {
      throw DomainError("type " + s.ToString() + " outside [0,1]");
    }
    return s;
  }
  return (*steps)(s);
}

SkepticalTypeMap ComputeSkepticalTypeMap(const VerifStructure& m) {
  if (m.full_verifiability()) return {true, std::nullopt};
  std::vector<Rational> knots = m.SupportEndpoints();
  knots.emplace_back(0);
  knots.emplace_back(1);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto best_min_at = [&](const Rational& s) {
    std::optional<Rational> best;
    for (const Message& msg : m.messages()) {
      if (!msg.support.Contains(s)) continue;
      const Rational lo = *msg.support.Min();
      if (!best || *best < lo) best = lo;
    }
    return *best;  // coverage is a structure invariant
  };

  std::vector<Rational> knot_values;
  std::vector<Rational> gap_values;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    knot_values.push_back(best_min_at(knots[i]));
    if (i + 1 < knots.size()) {
      gap_values.push_back(best_min_at(Midpoint(knots[i], knots[i + 1])));
    }
  }
  return {false, StepFunction::FromKnots(std::move(knots),
                                         std::move(knot_values),
                                         std::move(gap_values))};
}

bool HasUpperSemicontinuousTypeMap(const VerifStructure& m) {
  const SkepticalTypeMap g = ComputeSkepticalTypeMap(m);
  return g.identity || g.steps->IsUpperSemicontinuous();
}

VerifStructure CheapTalk(const std::vector<std::string>& names) {
  if (names.empty()) throw ConstructionError("cheap talk needs a message");
  std::vector<Message> messages;
  for (const std::string& n : names) {
    messages.push_back({n, IntervalUnion::Unit()});
  }
  return VerifStructure(std::move(messages), false);
}

VerifStructure Thresholds(const std::vector<Rational>& levels,
                          const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].Sign() <= 0 || levels[i] > Rational(1) ||
        (i > 0 && !(levels[i - 1] < levels[i]))) {
      throw ConstructionError(
          "threshold levels must be strictly ascending in (0,1]");
    }
  }
  const std::vector<std::string> labels =
      names.empty() ? DefaultNames("m", levels.size() + 1) : names;
  if (labels.size() != levels.size() + 1) {
    throw ConstructionError("thresholds need one name per level plus base");
  }
  std::vector<Message> messages{{labels[0], IntervalUnion::Unit()}};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    messages.push_back(
        {labels[i + 1], IntervalUnion({Interval::Closed(levels[i], 1)})});
  }
  return VerifStructure(std::move(messages), false);
}

VerifStructure Partition(const std::vector<Interval>& cells,
                         const std::vector<std::string>& names) {
  const std::vector<std::string> labels =
      names.empty() ? DefaultNames("P", cells.size()) : names;
  if (labels.size() != cells.size()) {
    throw ConstructionError("partition needs one name per cell");
  }
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cells[a].lo < cells[b].lo;
  });
  std::vector<Message> messages;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Interval& cell = cells[order[k]];
    if (cell.IsEmpty() || !cell.lo_closed) {
      throw ConstructionError("partition cells must be non-empty and "
                              "left-closed");
    }
    if (k == 0 && cell.lo != Rational(0)) {
      throw ConstructionError("partition does not cover 0");
    }
    if (k > 0) {
      const Interval& prev = cells[order[k - 1]];
      if (cell.lo < prev.hi || (cell.lo == prev.hi && prev.hi_closed)) {
        throw ConstructionError("partition cells overlap");
      }
      if (cell.lo > prev.hi) throw ConstructionError("partition has a gap");
    }
    if (k + 1 == order.size() && !(cell.hi == Rational(1) && cell.hi_closed)) {
      throw ConstructionError("partition does not cover 1");
    }
    messages.push_back({labels[order[k]], IntervalUnion({cell})});
  }
  return VerifStructure(std::move(messages), false);
}

VerifStructure AddMessage(const VerifStructure& base, std::string name,
                          IntervalUnion support) {
  std::vector<Message> messages = base.messages();
  messages.push_back({std::move(name), std::move(support)});
  return VerifStructure(std::move(messages), base.full_verifiability());
}

VerifStructure FullVerif(const VerifStructure& base) {
  return VerifStructure(base.messages(), true);
}

VerifStructure MandatoryDisclosure() { return VerifStructure({}, true); }

}  // namespace vds
