#pragma once

#include "betti.hpp"
#include "binomial.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "gin.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "shift.hpp"
#include "simplicial_complex.hpp"
#include "stanley_reisner.hpp"
#include "term_order.hpp"
#include "usli.hpp"
