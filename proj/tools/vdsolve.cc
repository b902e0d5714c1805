// vdsolve: solve, compare and cross-check verifiable-disclosure games.
//
// Exit codes: 0 success (or the relation holds), 1 semantic negative
// (verification failure, oracle disagreement, relation fails), 2 bad input
// or refusal.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vdsolve/comparative.h"
#include "vdsolve/equilibrium.h"
#include "vdsolve/errors.h"
#include "vdsolve/figure.h"
#include "vdsolve/io.h"
#include "vdsolve/oracle.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vds::ParseError("parse error: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Join(const std::set<vds::Rational>& values) {
  std::string out = "{";
  for (const vds::Rational& v : values) {
    if (out.size() > 1) out += ", ";
    out += v.ToString();
  }
  return out + "}";
}

int Solve(const std::string& path, bool json, const std::string& svg_path) {
  const vds::GameSpec game = vds::io::ParseGame(Slurp(path));
  const vds::Equilibrium eq = vds::Solve(game);
  const vds::VerificationReport report = vds::VerifyEquilibrium(game, eq);

  if (json) {
    std::cout << vds::io::ToJson(eq);
  } else {
    const vds::PnbpResult pnbp = vds::Pnbp(game);
    std::cout << "pnbp: " << (pnbp.holds ? "yes" : "no");
    if (pnbp.witness) std::cout << " (witness " << *pnbp.witness << ")";
    std::cout << "\nvalue: " << eq.value.ToString() << "\nsignal:";
    for (std::size_t i = 0; i < eq.signal.support.size(); ++i) {
      const vds::Rational& s = eq.signal.support[i];
      std::cout << (i ? "; " : " ") << s.ToString() << " (weight "
                << eq.signal.weights[i].ToString() << ") -> "
                << eq.messaging.at(s);
    }
    std::cout << "\nbeliefs:";
    bool first = true;
    for (const auto& [name, belief] : eq.beliefs) {
      std::cout << (first ? " " : ", ") << name << "=" << belief.ToString();
      first = false;
    }
    if (first) std::cout << " (identity messages only)";
    std::cout << "\nverified: " << (report.ok() ? "yes" : "no") << "\n";
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) {
      std::cerr << "vdsolve: cannot write '" << svg_path << "'\n";
      return kInputError;
    }
    out << vds::RenderSvg(game, eq);
  }
  if (!report.ok()) {
    std::cerr << "vdsolve: equilibrium check failed ("
              << vds::ToString(report.kind) << "): " << report.detail << "\n";
    return kNegative;
  }
  return kOk;
}

int Compare(const std::string& a, const std::string& b,
            const std::string& relation) {
  const vds::VerifStructure hi = vds::io::ParseStructure(Slurp(a));
  const vds::VerifStructure lo = vds::io::ParseStructure(Slurp(b));
  const vds::OrderVerdict verdict =
      relation == "lc" ? vds::GeqLc(hi, lo) : vds::GeqSep(hi, lo);
  std::cout << vds::io::ToJson(verdict, relation);
  return verdict.holds ? kOk : kNegative;
}

int Optimal(const std::string& path, bool sender) {
  const vds::VerifStructure m = vds::io::ParseStructure(Slurp(path));
  const bool yes = sender ? vds::IsSenderOptimal(m) : vds::IsReceiverOptimal(m);
  std::cout << (sender ? "sender" : "receiver")
            << "-optimal: " << (yes ? "yes" : "no") << "\n";
  return yes ? kOk : kNegative;
}

int Oracle(const std::string& path, vds::oracle::SearchLimits limits) {
  const vds::GameSpec game = vds::io::ParseGame(Slurp(path));
  const vds::ValueResult analytic = vds::EquilibriumValue(game);
  vds::oracle::SearchResult found;
  try {
    found = vds::oracle::ExhaustiveSearch(game, limits);
  } catch (const vds::LimitError& e) {
    std::cerr << "vdsolve: refused: " << e.what() << "\n";
    return kInputError;
  }
  const bool agree =
      !found.values.empty() && *found.values.rbegin() == analytic.value;
  std::cout << "analytic value: " << analytic.value.ToString() << " ("
            << (analytic.tag == vds::ValueTag::kUnique ? "unique"
                                                       : "sender-preferred")
            << ")\noracle values: " << Join(found.values)
            << "\ncandidates checked: " << found.candidates
            << "\nagree: " << (agree ? "yes" : "no") << "\n";
  return agree ? kOk : kNegative;
}

int Witness(const std::string& hi_path, const std::string& lo_path) {
  const vds::VerifStructure hi = vds::io::ParseStructure(Slurp(hi_path));
  const vds::VerifStructure lo = vds::io::ParseStructure(Slurp(lo_path));
  try {
    std::cout << vds::io::ToJson(vds::MakeSeparatingInstance(hi, lo));
  } catch (const vds::PreconditionError& e) {
    std::cerr << "vdsolve: " << e.what() << "\n";
    return kNegative;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of verifiable-disclosure games with exact rationals"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  std::string svg;
  CLI::App* solve = app.add_subcommand("solve", "Solve a game file");
  solve->add_option("game", path, "Game file")->required();
  solve->add_flag("--json", json, "Print the equilibrium as JSON");
  solve->add_option("--svg", svg, "Write a figure to this path");

  std::string path_b;
  std::string relation = "lc";
  CLI::App* compare =
      app.add_subcommand("compare", "Does structure A dominate structure B?");
  compare->add_option("a", path, "Structure or game file A")->required();
  compare->add_option("b", path_b, "Structure or game file B")->required();
  compare->add_option("--relation", relation, "lc or sep")
      ->check(CLI::IsMember({"lc", "sep"}));

  bool sender = false;
  bool receiver = false;
  CLI::App* optimal =
      app.add_subcommand("optimal", "Sender- or receiver-optimality check");
  optimal->add_option("structure", path, "Structure or game file")->required();
  CLI::Option* sender_flag = optimal->add_flag("--sender", sender);
  CLI::Option* receiver_flag = optimal->add_flag("--receiver", receiver);
  sender_flag->excludes(receiver_flag);
  optimal->final_callback([&] {
    if (!sender && !receiver) {
      throw CLI::RequiredError("--sender or --receiver");
    }
  });

  vds::oracle::SearchLimits limits;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Compare the solver with brute force");
  oracle->add_option("game", path, "Game file")->required();
  oracle->add_option("--max-messages", limits.max_messages)
      ->capture_default_str();
  oracle->add_option("--max-grid", limits.max_grid)->capture_default_str();

  CLI::App* witness = app.add_subcommand(
      "witness", "Game where LO earns the sender strictly more than HI");
  witness->add_option("hi", path, "Higher structure")->required();
  witness->add_option("lo", path_b, "Lower structure")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return Solve(path, json, svg);
    if (*compare) return Compare(path, path_b, relation);
    if (*optimal) return Optimal(path, sender);
    if (*oracle) return Oracle(path, limits);
    if (*witness) return Witness(path, path_b);
  } catch (const vds::ParseError& e) {
    std::cerr << "vdsolve: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "vdsolve: error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
