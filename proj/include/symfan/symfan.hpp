#pragma once

#include "rational.hpp"
#include "dd.hpp"
#include "kernel.hpp"
#include "polytope.hpp"
#include "typea.hpp"
#include "poset.hpp"
#include "sigma_poset.hpp"
#include "ffan.hpp"
#include "symmetrize.hpp"
#include "realize.hpp"
#include "verify.hpp"
#include "io.hpp"
