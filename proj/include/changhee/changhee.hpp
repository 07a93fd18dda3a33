#ifndef CHANGHEE_CHANGHEE_HPP
#define CHANGHEE_CHANGHEE_HPP

#include "changhee/json_io.hpp"
#include "changhee/ode_coeffs.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"
#include "changhee/sequences.hpp"
#include "changhee/series.hpp"
#include "changhee/tables.hpp"
#include "changhee/verify.hpp"

#endif  // CHANGHEE_CHANGHEE_HPP
