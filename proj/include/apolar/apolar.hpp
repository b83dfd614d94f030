#pragma once

#include "apolar/error.hpp"
#include "apolar/rational.hpp"
#include "apolar/matrix.hpp"
#include "apolar/univariate.hpp"
#include "apolar/number_field.hpp"
#include "apolar/multipoly.hpp"
#include "apolar/apolarity.hpp"
#include "apolar/jacobian.hpp"
#include "apolar/families.hpp"
#include "apolar/parser.hpp"
#include "apolar/serialize.hpp"
