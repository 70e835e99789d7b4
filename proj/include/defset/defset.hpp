#pragma once

#include "defset/error.hpp"
#include "defset/numeric.hpp"
#include "defset/field.hpp"
#include "defset/cyclotomic.hpp"
#include "defset/funcspec.hpp"
#include "defset/designs.hpp"
#include "defset/boolfn.hpp"
#include "defset/code.hpp"
#include "defset/predict.hpp"
#include "defset/io.hpp"
#include "defset/family.hpp"
#include "defset/verify.hpp"
