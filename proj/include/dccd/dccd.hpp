#pragma once

#include "bounds.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "cost.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "expansion.hpp"
#include "io.hpp"
#include "one_factorization.hpp"
#include "search.hpp"
