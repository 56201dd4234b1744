#pragma once

// Certified Levine-Tristram signature invariants of knots from Seifert
// matrices, and the derived invariants of knotted tori in homology S^1 x S^3.

#include "ltsig/arith.hpp"
#include "ltsig/catalog.hpp"
#include "ltsig/cyclotomic.hpp"
#include "ltsig/errors.hpp"
#include "ltsig/polynomial.hpp"
#include "ltsig/rational.hpp"
#include "ltsig/root_isolation.hpp"
#include "ltsig/rotation.hpp"
#include "ltsig/seifert.hpp"
#include "ltsig/signature.hpp"
#include "ltsig/torus.hpp"
