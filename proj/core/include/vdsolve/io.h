#ifndef VDSOLVE_IO_H_
#define VDSOLVE_IO_H_

#include <string>
#include <string_view>

#include "vdsolve/comparative.h"
#include "vdsolve/equilibrium.h"
#include "vdsolve/verifiability.h"

// JSON reading and writing. Rationals travel as strings ("3/4", "-2", "0");
// plain JSON integers are accepted on input, floats never. Every ParseError
// names the offending field as a JSON pointer.
namespace vds::io {

// {"prior", "payoff": {"breakpoints", "values"}, "structure"}.
GameSpec ParseGame(std::string_view text);
std::string ToJson(const GameSpec& game);

// {"full_verifiability", "messages": [{"name", "support": [{"lo", "hi",
// "hi_closed"}]}]}. ParseStructure also accepts a whole game file and
// takes its structure.
VerifStructure ParseStructure(std::string_view text);
std::string ToJson(const VerifStructure& m);

// {"value", "signal": [{"posterior", "weight", "message"}], "beliefs",
// "pnbp", "s_minus", "s_plus"}. Parsing recomputes w_beta from the beliefs
// and, without PNBP, takes the first signal message as the designated one.
std::string ToJson(const Equilibrium& eq);
Equilibrium ParseEquilibrium(std::string_view text, const GameSpec& game);

// {"relation", "holds", "witness"}; witness is null when the order holds.
std::string ToJson(const OrderVerdict& verdict, std::string_view relation);

// {"s_star", "value_hi", "value_lo", "game_hi", "game_lo"}.
std::string ToJson(const SeparatingInstance& instance);

}  // namespace vds::io

#endif  // VDSOLVE_IO_H_
