// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_MAGCP_HPP_
#define MAGCP_MAGCP_HPP_

#include "magcp/angular_momentum.hpp"
#include "magcp/asymptotes.hpp"
#include "magcp/atom.hpp"
#include "magcp/constants.hpp"
#include "magcp/entropy.hpp"
#include "magcp/errors.hpp"
#include "magcp/free_energy.hpp"
#include "magcp/greens.hpp"
#include "magcp/length_scales.hpp"
#include "magcp/materials.hpp"
#include "magcp/matsubara.hpp"
#include "magcp/quadrature.hpp"
#include "magcp/scenario.hpp"

#endif // MAGCP_MAGCP_HPP_
