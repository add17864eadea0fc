// twobytwo.hpp - umbrella header.
#pragma once

#include "twobytwo/decomp.hpp"
#include "twobytwo/fourvector.hpp"
#include "twobytwo/generators.hpp"
#include "twobytwo/littlegroup.hpp"
#include "twobytwo/mat2.hpp"
#include "twobytwo/mat4.hpp"
#include "twobytwo/oscillator.hpp"
#include "twobytwo/poincare.hpp"
#include "twobytwo/spinorbilinear.hpp"
