#pragma once

#include "pmds/bin_poly.hpp"
#include "pmds/codec.hpp"
#include "pmds/code_params.hpp"
#include "pmds/errors.hpp"
#include "pmds/fast_checks.hpp"
#include "pmds/matrix.hpp"
#include "pmds/modulus.hpp"
#include "pmds/parity_check.hpp"
#include "pmds/reliability.hpp"
#include "pmds/tables.hpp"
#include "pmds/verifier.hpp"
