// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_HPP_
#define MAGCP_SCAN_HPP_

#include "magcp/scan/config.hpp"
#include "magcp/scan/emit.hpp"
#include "magcp/scan/presets.hpp"
#include "magcp/scan/run.hpp"
#include "magcp/scan/units.hpp"

#endif // MAGCP_SCAN_HPP_
