#pragma once

#include "matlen/errors.hpp"
#include "matlen/field.hpp"
#include "matlen/scalar.hpp"
#include "matlen/matrix.hpp"
#include "matlen/polynomial.hpp"
#include "matlen/span.hpp"
#include "matlen/length.hpp"
#include "matlen/constructions.hpp"
#include "matlen/random.hpp"
#include "matlen/document.hpp"
#include "matlen/verifier.hpp"
