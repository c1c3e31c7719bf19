#pragma once

#include "nsmod/axioms.hpp"
#include "nsmod/canonical.hpp"
#include "nsmod/dihedral.hpp"
#include "nsmod/enumerate.hpp"
#include "nsmod/envelope.hpp"
#include "nsmod/error.hpp"
#include "nsmod/free_operad.hpp"
#include "nsmod/graph.hpp"
#include "nsmod/io.hpp"
#include "nsmod/orders.hpp"
#include "nsmod/text.hpp"
