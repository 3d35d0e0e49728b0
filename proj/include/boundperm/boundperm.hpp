#pragma once

// Umbrella header.

#include "ballot.hpp"
#include "codes.hpp"
#include "distribution.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "generating.hpp"
#include "pattern.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "series.hpp"
#include "text.hpp"
#include "verify.hpp"
