#pragma once

#include "sectional/error.hpp"
#include "sectional/element_set.hpp"
#include "sectional/poset.hpp"
#include "sectional/tables.hpp"
#include "sectional/selection.hpp"
#include "sectional/pseudocomplements.hpp"
#include "sectional/extensions.hpp"
#include "sectional/checks.hpp"
#include "sectional/axioms.hpp"
#include "sectional/document.hpp"
#include "sectional/enumeration.hpp"
