#pragma once

#include "menon/arith.hpp"
#include "menon/cyclo.hpp"
#include "menon/error.hpp"
#include "menon/even_function.hpp"
#include "menon/records.hpp"
#include "menon/sums.hpp"
#include "menon/verify.hpp"
