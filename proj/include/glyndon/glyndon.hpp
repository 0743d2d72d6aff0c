#pragma once

// Umbrella header for the generalized Lyndon toolkit.

#include "alphabet.hpp"
#include "compare.hpp"
#include "errors.hpp"
#include "eventually_periodic.hpp"
#include "galois.hpp"
#include "json_io.hpp"
#include "lyndon_finite.hpp"
#include "lyndon_infinite.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "random.hpp"
#include "stream.hpp"
#include "suites.hpp"
#include "text.hpp"
#include "word.hpp"
