#pragma once

#include "liemat/complexstruct.hpp"
#include "liemat/core.hpp"
#include "liemat/fidelity.hpp"
#include "liemat/generators.hpp"
#include "liemat/geometry.hpp"
#include "liemat/harness.hpp"
#include "liemat/io.hpp"
#include "liemat/lift.hpp"
#include "liemat/linalg.hpp"
#include "liemat/nilpotent.hpp"
#include "liemat/report.hpp"
#include "liemat/rng.hpp"
