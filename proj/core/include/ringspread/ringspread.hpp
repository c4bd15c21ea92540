#ifndef RINGSPREAD_RINGSPREAD_HPP
#define RINGSPREAD_RINGSPREAD_HPP

#include "ringspread/circle_state.hpp"
#include "ringspread/errors.hpp"
#include "ringspread/measures.hpp"
#include "ringspread/numerics.hpp"
#include "ringspread/state_spec.hpp"
#include "ringspread/windowed_moments.hpp"

#endif  // RINGSPREAD_RINGSPREAD_HPP
