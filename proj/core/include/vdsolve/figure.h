#ifndef VDSOLVE_FIGURE_H_
#define VDSOLVE_FIGURE_H_

#include <string>

#include "vdsolve/equilibrium.h"

namespace vds {

// SVG of a solved game: v as a bold step, the skeptical payoff v_- dashed,
// its concavification as a gray chord, the prior marked, the equilibrium
// posteriors as large gray dots, and each message's support as a bar below
// the horizontal axis. The output depends only on the inputs, byte for byte.
std::string RenderSvg(const GameSpec& game, const Equilibrium& eq);

}  // namespace vds

#endif  // VDSOLVE_FIGURE_H_
