#pragma once

#include "skewbrace/analysis.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/clifford.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/field.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/lambda_group.hpp"
#include "skewbrace/matrix.hpp"
#include "skewbrace/module.hpp"
#include "skewbrace/polynomial.hpp"
#include "skewbrace/representation.hpp"
