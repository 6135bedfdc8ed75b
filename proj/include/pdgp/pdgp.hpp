#pragma once

#include "pdgp/bialgebra.hpp"
#include "pdgp/chord.hpp"
#include "pdgp/coeff.hpp"
#include "pdgp/error.hpp"
#include "pdgp/gf2.hpp"
#include "pdgp/graph.hpp"
#include "pdgp/graph_io.hpp"
#include "pdgp/invariants.hpp"
#include "pdgp/parallel.hpp"
#include "pdgp/polynomial.hpp"
#include "pdgp/random.hpp"
#include "pdgp/subset.hpp"
#include "pdgp/verify.hpp"
