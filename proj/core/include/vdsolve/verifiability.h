#ifndef VDSOLVE_VERIFIABILITY_H_
#define VDSOLVE_VERIFIABILITY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vdsolve/interval.h"
#include "vdsolve/piecewise.h"
#include "vdsolve/rational.h"

namespace vds {

struct Message {
  std::string name;
  // Types able to send the message. Every piece must be left-closed so that
  // the lowest such type exists.
  IntervalUnion support;

  friend bool operator==(const Message&, const Message&) = default;
};

// Which messages each sender type s in [0,1] may send.
//
// A structure is a finite message list, optionally augmented with the
// full-verifiability family: every type s also owns an identity message,
// sendable by s alone. Identity messages are never stored; they are named
// by IdentityMessageName(s) and handled analytically.
class VerifStructure {
 public:
  VerifStructure(std::vector<Message> messages, bool full_verifiability);

  const std::vector<Message>& messages() const { return messages_; }
  bool full_verifiability() const { return full_verifiability_; }

  // Stored message by name, or nullptr (identity names are not stored).
  const Message* Find(std::string_view name) const;
  bool HasMessage(std::string_view name) const;

  // All support endpoints of the finite messages, ascending.
  std::vector<Rational> SupportEndpoints() const;

  friend bool operator==(const VerifStructure&,
                         const VerifStructure&) = default;

 private:
  std::vector<Message> messages_;
  bool full_verifiability_ = false;
};

// Identity messages are spelled "id:<type>", e.g. "id:4/5". The prefix is
// reserved; stored messages may not use it.
std::string IdentityMessageName(const Rational& s);
std::optional<Rational> ParseIdentityMessageName(std::string_view name);

// Sorted names of the messages available at s, including the identity
// message under full verifiability. Throws DomainError outside [0,1] and
// ConstructionError when nothing is available.
std::vector<std::string> MessagesAt(const VerifStructure& m, const Rational& s);

// min M^{-1}(name). Throws LookupError for unknown names.
Rational MinInverse(const VerifStructure& m, std::string_view name);

// conv M^{-1}(name): [min, sup], with sup excluded when not attained.
Interval ConvexHullOfSupport(const VerifStructure& m, std::string_view name);

// Types that are the lowest sender of some message.
struct LowestConsistentSet {
  std::vector<Rational> types;  // ascending, deduplicated
  bool all_of_unit_interval = false;

  bool Contains(const Rational& s) const;
  bool IncludesAll(const LowestConsistentSet& other) const;

  friend bool operator==(const LowestConsistentSet&,
                         const LowestConsistentSet&) = default;
};

LowestConsistentSet ComputeLowestConsistentSet(const VerifStructure& m);

// g(s) = max over available messages of min M^{-1}(m). Under full
// verifiability g is the identity map, flagged rather than tabulated.
struct SkepticalTypeMap {
  bool identity = false;
  std::optional<StepFunction> steps;  // set iff !identity

  Rational operator()(const Rational& s) const;
};

SkepticalTypeMap ComputeSkepticalTypeMap(const VerifStructure& m);

// True when the skeptical type map is upper semicontinuous, the regularity
// the existence argument relies on. Supports closed on both ends always
// satisfy it.
bool HasUpperSemicontinuousTypeMap(const VerifStructure& m);

// Builders for the standard structures.

// Every message available to every type.
VerifStructure CheapTalk(const std::vector<std::string>& names);

// Base message on [0,1] plus one message on [level_i, 1] per level.
// Levels must be strictly ascending in (0,1]. names (if given) has one entry
// per message, base message first; default names are m0, m1, ...
VerifStructure Thresholds(const std::vector<Rational>& levels,
                          const std::vector<std::string>& names = {});

// One message per cell; cells must be left-closed, disjoint and tile [0,1].
VerifStructure Partition(const std::vector<Interval>& cells,
                         const std::vector<std::string>& names = {});

VerifStructure AddMessage(const VerifStructure& base, std::string name,
                          IntervalUnion support);

VerifStructure FullVerif(const VerifStructure& base);

// M(s) = {s}.
VerifStructure MandatoryDisclosure();

}  // namespace vds

#endif  // VDSOLVE_VERIFIABILITY_H_
