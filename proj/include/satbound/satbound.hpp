// satbound.hpp — umbrella header.
#pragma once

#include "satbound/conjunction.hpp"
#include "satbound/errors.hpp"
#include "satbound/experiments.hpp"
#include "satbound/pac_bound.hpp"
#include "satbound/spectrum.hpp"
#include "satbound/synthetic_sut.hpp"
#include "satbound/triangle.hpp"
