#pragma once

#include "caper/borel.hpp"
#include "caper/bottleneck.hpp"
#include "caper/builders.hpp"
#include "caper/complex.hpp"
#include "caper/diagram.hpp"
#include "caper/errors.hpp"
#include "caper/fields.hpp"
#include "caper/homology_class.hpp"
#include "caper/io.hpp"
#include "caper/module.hpp"
#include "caper/rational.hpp"
#include "caper/reduction.hpp"
#include "caper/sparse.hpp"
#include "caper/svg.hpp"
