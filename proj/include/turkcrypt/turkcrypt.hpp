#pragma once

#include "turkcrypt/analysis.hpp"
#include "turkcrypt/cascade.hpp"
#include "turkcrypt/classical.hpp"
#include "turkcrypt/error.hpp"
#include "turkcrypt/keyset.hpp"
#include "turkcrypt/random.hpp"
#include "turkcrypt/text.hpp"
#include "turkcrypt/utf8.hpp"
