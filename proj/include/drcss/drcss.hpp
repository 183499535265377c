#pragma once

#include "drcss/errors.hpp"
#include "drcss/phase.hpp"
#include "drcss/parallel.hpp"
#include "drcss/number_theory.hpp"
#include "drcss/ambiguity.hpp"
#include "drcss/bounds.hpp"
#include "drcss/finite_field.hpp"
#include "drcss/ingredients.hpp"
#include "drcss/drss.hpp"
#include "drcss/ccc.hpp"
#include "drcss/constructions.hpp"
#include "drcss/format.hpp"
#include "drcss/io.hpp"
#include "drcss/reproduce.hpp"
