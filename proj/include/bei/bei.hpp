#ifndef BEI_BEI_HPP
#define BEI_BEI_HPP

#include "bei/betti.hpp"
#include "bei/census.hpp"
#include "bei/chordal.hpp"
#include "bei/classify.hpp"
#include "bei/cliques.hpp"
#include "bei/closed.hpp"
#include "bei/closed_cm.hpp"
#include "bei/cutsets.hpp"
#include "bei/engine.hpp"
#include "bei/gf.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/hilbert.hpp"
#include "bei/identities.hpp"
#include "bei/monomial.hpp"
#include "bei/polynomial.hpp"
#include "bei/report.hpp"
#include "bei/resolution.hpp"

#endif
