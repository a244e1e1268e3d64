#pragma once

#include "arith.hpp"
#include "audit.hpp"
#include "catalog.hpp"
#include "complex.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "poset.hpp"
