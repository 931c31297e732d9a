#pragma once

#include "rootforge/algebraic.hpp"
#include "rootforge/certify.hpp"
#include "rootforge/cluster.hpp"
#include "rootforge/dyadic.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/factorizer.hpp"
#include "rootforge/int_poly.hpp"
#include "rootforge/int_poly2.hpp"
#include "rootforge/interval.hpp"
#include "rootforge/isolator.hpp"
#include "rootforge/mod_poly.hpp"
#include "rootforge/oracle.hpp"
#include "rootforge/root_bound.hpp"
#include "rootforge/subresultant.hpp"
#include "rootforge/topology.hpp"
