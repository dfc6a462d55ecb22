#pragma once

#include "analysis.hpp"
#include "codes.hpp"
#include "dna.hpp"
#include "gf4.hpp"
#include "io.hpp"
#include "reproduction.hpp"
#include "ring.hpp"
#include "skew_poly.hpp"
