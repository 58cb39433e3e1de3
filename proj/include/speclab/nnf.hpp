#pragma once

#include "speclab/formula.hpp"

namespace speclab {

// Negation normal form over the solver core {&&, ||, X, U, R, literals,
// constants}.  Implies/F/G/W are expanded away; negation ends up only on
// atoms.  Semantically equivalent to the input.
Formula nnf(const Formula& f);

}  // namespace speclab
