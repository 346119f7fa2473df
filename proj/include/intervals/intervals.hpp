#pragma once

#include "intervals/algebra.hpp"
#include "intervals/errors.hpp"
#include "intervals/exact.hpp"
#include "intervals/gamma.hpp"
#include "intervals/generate.hpp"
#include "intervals/io.hpp"
#include "intervals/matrix.hpp"
#include "intervals/paths.hpp"
#include "intervals/polynomial.hpp"
#include "intervals/poset.hpp"
#include "intervals/rep.hpp"
