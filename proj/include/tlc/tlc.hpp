#ifndef TLC_TLC_HPP
#define TLC_TLC_HPP

#include "tlc/scalar.hpp"
#include "tlc/extended_int.hpp"
#include "tlc/monomial.hpp"
#include "tlc/polynomial.hpp"
#include "tlc/free_module.hpp"
#include "tlc/groebner.hpp"
#include "tlc/hilbert.hpp"
#include "tlc/presentation.hpp"
#include "tlc/resolution.hpp"
#include "tlc/homological.hpp"
#include "tlc/invariants.hpp"
#include "tlc/monomial_ideal.hpp"
#include "tlc/cech.hpp"
#include "tlc/filtration.hpp"
#include "tlc/tensor.hpp"
#include "tlc/harness/instance.hpp"
#include "tlc/harness/report.hpp"
#include "tlc/harness/checks.hpp"
#include "tlc/harness/suite.hpp"
#include "tlc/session.hpp"

#endif  // TLC_TLC_HPP
