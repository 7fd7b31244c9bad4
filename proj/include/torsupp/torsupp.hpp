#pragma once

// Exact combinatorial calculus for hyperplane multi-arrangements: supports of
// specialization complexes as unions of torsion-translated subtori, zero loci
// of imported Bernstein-Sato ideal data, multi-variable topological zeta
// functions, and the associated monodromy-style decision procedures.

#include "torsupp/affine.hpp"
#include "torsupp/arrangement.hpp"
#include "torsupp/bs_ideal.hpp"
#include "torsupp/json_io.hpp"
#include "torsupp/lattice.hpp"
#include "torsupp/matrix.hpp"
#include "torsupp/print.hpp"
#include "torsupp/rational.hpp"
#include "torsupp/spoly.hpp"
#include "torsupp/support.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"
