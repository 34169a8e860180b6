#pragma once

#include "nsg/error.hpp"
#include "nsg/families.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/gluings.hpp"
#include "nsg/length_density.hpp"
#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"
