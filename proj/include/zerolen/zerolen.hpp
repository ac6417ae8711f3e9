#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "group.hpp"
#include "sequence.hpp"
#include "parallel.hpp"
#include "atoms.hpp"
#include "length_set.hpp"
#include "lengths.hpp"
#include "system.hpp"
#include "families.hpp"
#include "numerical.hpp"
#include "verify.hpp"
