#pragma once

#include "rational.hpp"
#include "weight.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"
#include "liealg.hpp"
#include "charlib.hpp"
#include "verma.hpp"
#include "chains.hpp"
#include "homology.hpp"
#include "catO.hpp"
#include "serialize.hpp"
#include "oracles.hpp"
#include "verify.hpp"
