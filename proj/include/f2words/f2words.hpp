#pragma once

#include "automorphism.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "letter.hpp"
#include "minimality.hpp"
#include "verification.hpp"
#include "whitehead_search.hpp"
#include "word.hpp"
