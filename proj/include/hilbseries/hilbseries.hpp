#pragma once

// Hilbert series, resolutions and periodicity for graded algebras and
// modules over F_p and Q.

#include "hilbseries/error.hpp"
#include "hilbseries/field.hpp"
#include "hilbseries/matrix.hpp"
#include "hilbseries/sparse.hpp"
#include "hilbseries/word.hpp"
#include "hilbseries/polynomial.hpp"
#include "hilbseries/presentation.hpp"
#include "hilbseries/groebner.hpp"
#include "hilbseries/algebra.hpp"
#include "hilbseries/module.hpp"
#include "hilbseries/series.hpp"
#include "hilbseries/resolution.hpp"
#include "hilbseries/periodicity.hpp"
#include "hilbseries/families.hpp"
#include "hilbseries/enumerate.hpp"
#include "hilbseries/parser.hpp"
