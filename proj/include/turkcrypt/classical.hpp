#pragma once

#include "turkcrypt/classical/letter_set.hpp"
#include "turkcrypt/classical/playfair.hpp"
#include "turkcrypt/classical/polybius.hpp"
#include "turkcrypt/classical/substitution.hpp"
#include "turkcrypt/classical/transposition.hpp"
