#pragma once

#include "apollo/core.hpp"
#include "apollo/errors.hpp"
#include "apollo/exact.hpp"
#include "apollo/insphere.hpp"
#include "apollo/inversion.hpp"
#include "apollo/order.hpp"
#include "apollo/shadow.hpp"
#include "apollo/trisector.hpp"
