#pragma once

#include "dnq/coherent.hpp"
#include "dnq/dihedral.hpp"
#include "dnq/kinematics.hpp"
#include "dnq/linalg.hpp"
#include "dnq/verdict.hpp"
#include "dnq/verify.hpp"
