#pragma once

// Everything except io/ (which needs OpenSSL).

#include "glk/core/crt.hpp"
#include "glk/core/integer.hpp"
#include "glk/core/mat2.hpp"
#include "glk/core/poly_fp.hpp"
#include "glk/core/primes.hpp"
#include "glk/core/residue.hpp"
#include "glk/rep/elliptic.hpp"
#include "glk/rep/source.hpp"
#include "glk/rep/splitting_field.hpp"
#include "glk/local/cohomology.hpp"
#include "glk/local/cup.hpp"
#include "glk/local/nice.hpp"
#include "glk/deform/cocycle.hpp"
#include "glk/deform/teichmuller.hpp"
#include "glk/deform/versal.hpp"
#include "glk/selmer/chases.hpp"
#include "glk/selmer/ledger.hpp"
#include "glk/charpoly/purity.hpp"
#include "glk/sim/growth.hpp"
#include "glk/sim/polarisation.hpp"
#include "glk/sim/sampler.hpp"
#include "glk/sim/stage.hpp"
