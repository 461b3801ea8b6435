#pragma once

#include "cylrep/acceptance.hpp"
#include "cylrep/cli_support.hpp"
#include "cylrep/config.hpp"
#include "cylrep/cylinder.hpp"
#include "cylrep/errors.hpp"
#include "cylrep/fourier.hpp"
#include "cylrep/gamma.hpp"
#include "cylrep/grid.hpp"
#include "cylrep/limits.hpp"
#include "cylrep/oracles.hpp"
#include "cylrep/order.hpp"
#include "cylrep/quadrature.hpp"
#include "cylrep/spherical.hpp"
