#pragma once

#include "gadic/base.hpp"
#include "gadic/crt.hpp"
#include "gadic/digit_expansion.hpp"
#include "gadic/errors.hpp"
#include "gadic/hensel.hpp"
#include "gadic/notation.hpp"
#include "gadic/padic_log.hpp"
#include "gadic/polynomial.hpp"
#include "gadic/roots.hpp"
