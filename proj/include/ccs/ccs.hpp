#pragma once

#include "ccs/check.hpp"
#include "ccs/colouring.hpp"
#include "ccs/crossed_module.hpp"
#include "ccs/error.hpp"
#include "ccs/exact.hpp"
#include "ccs/fixtures.hpp"
#include "ccs/group.hpp"
#include "ccs/json_io.hpp"
#include "ccs/surface.hpp"
#include "ccs/tqft.hpp"
#include "ccs/two_group.hpp"
#include "ccs/verify.hpp"
