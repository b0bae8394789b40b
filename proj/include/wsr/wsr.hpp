#pragma once

#include "wsr/applications.hpp"
#include "wsr/char_pair.hpp"
#include "wsr/harness.hpp"
#include "wsr/io.hpp"
#include "wsr/lattice.hpp"
#include "wsr/matrix.hpp"
#include "wsr/normal_form.hpp"
#include "wsr/numeric.hpp"
#include "wsr/polynomial.hpp"
#include "wsr/version.hpp"
#include "wsr/wsr2.hpp"
