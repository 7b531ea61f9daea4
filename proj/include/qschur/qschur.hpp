#pragma once

#include "qschur/laurent.hpp"   // IWYU pragma: export
#include "qschur/rings.hpp"     // IWYU pragma: export
#include "qschur/matrix.hpp"    // IWYU pragma: export
#include "qschur/combin.hpp"    // IWYU pragma: export
#include "qschur/qpoly.hpp"     // IWYU pragma: export
#include "qschur/hecke.hpp"     // IWYU pragma: export
#include "qschur/schur.hpp"     // IWYU pragma: export
#include "qschur/complex.hpp"   // IWYU pragma: export
#include "qschur/bar.hpp"       // IWYU pragma: export
#include "qschur/bm.hpp"        // IWYU pragma: export
