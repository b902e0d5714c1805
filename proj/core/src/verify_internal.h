#ifndef VDSOLVE_VERIFY_INTERNAL_H_
#define VDSOLVE_VERIFY_INTERNAL_H_

#include <functional>
#include <vector>

#include "vdsolve/equilibrium.h"
#include "vdsolve/oracle.h"

namespace vds::internal {

// VerifyEquilibrium with the deviation search and the critical grid supplied
// by the caller, so the brute-force search can reuse them across candidates
// that share a belief map. `deviation` is only called once beliefs pass the
// consistency check.
VerificationReport VerifyWith(
    const GameSpec& game, const Equilibrium& eq,
    const std::function<const oracle::Deviation&()>& deviation,
    const std::vector<Rational>& grid);

}  // namespace vds::internal

#endif  // VDSOLVE_VERIFY_INTERNAL_H_
