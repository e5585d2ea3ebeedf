#ifndef ONEUNIT_ONEUNIT_HPP
#define ONEUNIT_ONEUNIT_HPP

#include "oneunit/errors.hpp"
#include "oneunit/fp.hpp"
#include "oneunit/padic.hpp"
#include "oneunit/period.hpp"
#include "oneunit/polynomial.hpp"
#include "oneunit/series.hpp"
#include "oneunit/unit_group.hpp"

#endif  // ONEUNIT_ONEUNIT_HPP
