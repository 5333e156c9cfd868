#pragma once

#include "bigint.hpp"
#include "bricks.hpp"
#include "conformance.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "posets.hpp"
#include "reciprocity.hpp"
#include "recursions.hpp"
#include "reference_tables.hpp"
#include "series.hpp"
#include "verify.hpp"
