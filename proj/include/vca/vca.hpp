#pragma once

#include "vca/algebra.hpp"
#include "vca/arith.hpp"
#include "vca/complex.hpp"
#include "vca/cone.hpp"
#include "vca/error.hpp"
#include "vca/graph.hpp"
#include "vca/io.hpp"
#include "vca/monomial.hpp"
#include "vca/parallel.hpp"
