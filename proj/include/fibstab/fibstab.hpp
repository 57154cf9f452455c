#pragma once

// Exact-arithmetic toolkit for the numerical side of stability conditions
// on threefolds fibred over a curve: twisted Chern characters, slopes and
// central charges, Bogomolov-type discriminants, wall finding, and the
// projective-bundle inequality region.

#include "fibstab/chern.hpp"
#include "fibstab/error.hpp"
#include "fibstab/geometry.hpp"
#include "fibstab/io.hpp"
#include "fibstab/pbundle.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/slopes.hpp"
#include "fibstab/tilt.hpp"
#include "fibstab/values.hpp"
#include "fibstab/walls.hpp"
