#pragma once

#include "cforge/error.hpp"
#include "cforge/field.hpp"
#include "cforge/cpoly.hpp"
#include "cforge/ncpoly.hpp"
#include "cforge/mixed.hpp"
#include "cforge/parse.hpp"
#include "cforge/formspec.hpp"
#include "cforge/presentation.hpp"
#include "cforge/linalg.hpp"
#include "cforge/rewrite.hpp"
#include "cforge/matrep.hpp"
#include "cforge/ulrich.hpp"
#include "cforge/json_io.hpp"
