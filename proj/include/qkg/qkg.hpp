#pragma once

// Umbrella header.

#include "qkg/errors.hpp"
#include "qkg/quaternion.hpp"
#include "qkg/minkowski.hpp"
#include "qkg/freewave.hpp"
#include "qkg/gauge_potential.hpp"
#include "qkg/current.hpp"
#include "qkg/gauge.hpp"
#include "qkg/scattering.hpp"
#include "qkg/fdverify.hpp"
#include "qkg/io.hpp"
