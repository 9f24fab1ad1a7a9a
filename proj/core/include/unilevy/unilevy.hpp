#ifndef UNILEVY_UNILEVY_HPP
#define UNILEVY_UNILEVY_HPP

#include "unilevy/asym.hpp"
#include "unilevy/catalog.hpp"
#include "unilevy/density.hpp"
#include "unilevy/errors.hpp"
#include "unilevy/exponent.hpp"
#include "unilevy/model_io.hpp"
#include "unilevy/potential.hpp"
#include "unilevy/quadrature.hpp"
#include "unilevy/radial.hpp"
#include "unilevy/tail.hpp"

#endif
