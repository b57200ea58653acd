#pragma once

// Everything except the JSON layer (ps12/io.hpp), which needs vendor/json.hpp.

#include "ps12/assembly.hpp"
#include "ps12/basis_search.hpp"
#include "ps12/bspline1d.hpp"
#include "ps12/dual_functionals.hpp"
#include "ps12/factor.hpp"
#include "ps12/form.hpp"
#include "ps12/geometry.hpp"
#include "ps12/linalg.hpp"
#include "ps12/marsden_catalog.hpp"
#include "ps12/rational.hpp"
#include "ps12/simplex_spline.hpp"
#include "ps12/spline_fn.hpp"
