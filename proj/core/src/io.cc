#include "vdsolve/io.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "json.hpp"

#include "vdsolve/errors.h"

namespace vds::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Walks a parsed document and reports failures with the JSON pointer of the
// field being read.
class Reader {
 public:
  Reader(const json& node, std::string path)
      : node_(node), path_(std::move(path)) {}

  const json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("parse error at " + (path_.empty() ? "/" : path_) + ": " +
                     what);
  }

  Reader Field(std::string_view key) const {
    if (!node_.is_object()) Fail("expected an object");
    const auto it = node_.find(key);
    if (it == node_.end()) {
      Reader(node_, path_ + "/" + std::string(key)).Fail("missing field");
    }
    return Reader(*it, path_ + "/" + std::string(key));
  }

  bool Has(std::string_view key) const {
    return node_.is_object() && node_.contains(key);
  }

  std::vector<Reader> Elements() const {
    if (!node_.is_array()) Fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < node_.size(); ++i) {
      out.emplace_back(node_[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }

  Rational AsRational() const {
    if (node_.is_number_integer()) {
      if (node_.is_number_unsigned() &&
          node_.get<std::uint64_t>() >
              static_cast<std::uint64_t>(INT64_MAX)) {
        Fail("integer out of range");
      }
      return Rational(node_.get<std::int64_t>());
    }
    if (!node_.is_string()) {
      Fail(node_.is_number() ? "floating-point numbers are not accepted; "
                               "write the rational as a string like \"3/4\""
                             : "expected a rational string");
    }
    try {
      return Rational::Parse(node_.get<std::string>());
    } catch (const ParseError& e) {
      Fail(e.what());
    }
  }

  bool AsBool() const {
    if (!node_.is_boolean()) Fail("expected true or false");
    return node_.get<bool>();
  }

  std::string AsString() const {
    if (!node_.is_string()) Fail("expected a string");
    return node_.get<std::string>();
  }

 private:
  const json& node_;
  std::string path_;
};

json ParseDocument(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(column) + ": malformed JSON");
  }
}

// Runs a constructor, turning its validation errors into field diagnostics.
template <typename F>
auto Build(const Reader& at, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const ConstructionError& e) {
    at.Fail(e.what());
  } catch (const DomainError& e) {
    at.Fail(e.what());
  }
}

IntervalUnion ReadSupport(const Reader& r) {
  std::vector<Interval> pieces;
  for (const Reader& piece : r.Elements()) {
    Interval iv;
    iv.lo = piece.Field("lo").AsRational();
    iv.hi = piece.Field("hi").AsRational();
    iv.lo_closed = true;
    iv.hi_closed = piece.Has("hi_closed") ? piece.Field("hi_closed").AsBool()
                                          : true;
    if (iv.IsEmpty()) piece.Fail("empty interval");
    pieces.push_back(std::move(iv));
  }
  return IntervalUnion(std::move(pieces));
}

VerifStructure ReadStructure(const Reader& r) {
  const bool full = r.Has("full_verifiability")
                        ? r.Field("full_verifiability").AsBool()
                        : false;
  std::vector<Message> messages;
  for (const Reader& msg : r.Field("messages").Elements()) {
    messages.push_back(
        {msg.Field("name").AsString(), ReadSupport(msg.Field("support"))});
  }
  return Build(r, [&] { return VerifStructure(std::move(messages), full); });
}

StepFunction ReadPayoff(const Reader& r) {
  std::vector<Rational> breakpoints;
  for (const Reader& b : r.Field("breakpoints").Elements()) {
    breakpoints.push_back(b.AsRational());
  }
  std::vector<Rational> values;
  for (const Reader& v : r.Field("values").Elements()) {
    values.push_back(v.AsRational());
  }
  return Build(r, [&] {
    return StepFunction(std::move(breakpoints), std::move(values));
  });
}

GameSpec ReadGame(const Reader& r) {
  Rational prior = r.Field("prior").AsRational();
  StepFunction payoff = ReadPayoff(r.Field("payoff"));
  VerifStructure structure = ReadStructure(r.Field("structure"));
  return Build(r, [&] {
    return GameSpec(std::move(payoff), std::move(prior), std::move(structure));
  });
}

ordered_json Str(const Rational& q) { return q.ToString(); }

ordered_json IntervalJson(const Interval& iv, bool with_lo_flag) {
  ordered_json out;
  out["lo"] = Str(iv.lo);
  out["hi"] = Str(iv.hi);
  if (with_lo_flag) out["lo_closed"] = iv.lo_closed;
  out["hi_closed"] = iv.hi_closed;
  return out;
}

ordered_json StructureJson(const VerifStructure& m) {
  ordered_json out;
  out["full_verifiability"] = m.full_verifiability();
  out["messages"] = ordered_json::array();
  for (const Message& msg : m.messages()) {
    ordered_json support = ordered_json::array();
    for (const Interval& iv : msg.support.intervals()) {
      support.push_back(IntervalJson(iv, false));
    }
    out["messages"].push_back({{"name", msg.name}, {"support", support}});
  }
  return out;
}

ordered_json GameJson(const GameSpec& game) {
  ordered_json payoff;
  payoff["breakpoints"] = ordered_json::array();
  for (const Rational& b : game.payoff().Breakpoints()) {
    payoff["breakpoints"].push_back(Str(b));
  }
  payoff["values"] = ordered_json::array();
  for (const Rational& v : game.payoff().Values()) {
    payoff["values"].push_back(Str(v));
  }
  ordered_json out;
  out["prior"] = Str(game.prior());
  out["payoff"] = std::move(payoff);
  out["structure"] = StructureJson(game.structure());
  return out;
}

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

GameSpec ParseGame(std::string_view text) {
  const json doc = ParseDocument(text);
  return ReadGame(Reader(doc, ""));
}

std::string ToJson(const GameSpec& game) { return Dump(GameJson(game)); }

VerifStructure ParseStructure(std::string_view text) {
  const json doc = ParseDocument(text);
  const Reader root(doc, "");
  if (root.Has("structure")) return ReadStructure(root.Field("structure"));
  return ReadStructure(root);
}

std::string ToJson(const VerifStructure& m) { return Dump(StructureJson(m)); }

std::string ToJson(const Equilibrium& eq) {
  ordered_json out;
  out["value"] = Str(eq.value);
  out["signal"] = ordered_json::array();
  for (std::size_t i = 0; i < eq.signal.support.size(); ++i) {
    const Rational& s = eq.signal.support[i];
    out["signal"].push_back({{"posterior", Str(s)},
                             {"weight", Str(eq.signal.weights[i])},
                             {"message", eq.messaging.at(s)}});
  }
  out["beliefs"] = ordered_json::object();
  for (const auto& [name, belief] : eq.beliefs) out["beliefs"][name] = Str(belief);
  out["pnbp"] = eq.pnbp;
  out["s_minus"] = Str(eq.s_minus);
  out["s_plus"] = Str(eq.s_plus);
  return Dump(out);
}

Equilibrium ParseEquilibrium(std::string_view text, const GameSpec& game) {
  const json doc = ParseDocument(text);
  const Reader root(doc, "");
  Equilibrium eq;
  eq.value = root.Field("value").AsRational();
  for (const Reader& entry : root.Field("signal").Elements()) {
    Rational s = entry.Field("posterior").AsRational();
    eq.signal.support.push_back(s);
    eq.signal.weights.push_back(entry.Field("weight").AsRational());
    if (!eq.messaging.emplace(s, entry.Field("message").AsString()).second) {
      entry.Fail("repeated posterior");
    }
  }
  const Reader beliefs = root.Field("beliefs");
  if (!beliefs.node().is_object()) beliefs.Fail("expected an object");
  for (const auto& [name, value] : beliefs.node().items()) {
    eq.beliefs[name] = Reader(value, beliefs.path() + "/" + name).AsRational();
  }
  eq.pnbp = root.Field("pnbp").AsBool();
  eq.s_minus = root.Field("s_minus").AsRational();
  eq.s_plus = root.Field("s_plus").AsRational();
  if (!eq.pnbp && !eq.signal.support.empty()) {
    eq.designated = eq.messaging.begin()->second;
  }
  try {
    eq.w_beta = ComputeWBeta(game, eq.beliefs);
  } catch (const LookupError& e) {
    beliefs.Fail(e.what());
  }
  return eq;
}

std::string ToJson(const OrderVerdict& verdict, std::string_view relation) {
  ordered_json out;
  out["relation"] = relation;
  out["holds"] = verdict.holds;
  if (verdict.type_witness) {
    out["witness"] = Str(*verdict.type_witness);
  } else if (verdict.separation_witness) {
    const SeparationWitness& w = *verdict.separation_witness;
    ordered_json set = ordered_json::array();
    for (const Interval& iv : w.set.intervals()) {
      set.push_back(IntervalJson(iv, true));
    }
    out["witness"] = {
        {"type", Str(w.type)}, {"message", w.message}, {"set", set}};
  } else {
    out["witness"] = nullptr;
  }
  return Dump(out);
}

std::string ToJson(const SeparatingInstance& instance) {
  ordered_json out;
  out["s_star"] = Str(instance.s_star);
  out["value_hi"] = Str(instance.value_hi);
  out["value_lo"] = Str(instance.value_lo);
  out["game_hi"] = GameJson(instance.game_hi);
  out["game_lo"] = GameJson(instance.game_lo);
  return Dump(out);
}

}  // namespace vds::io
