// Convenience header including the whole library.

#ifndef MTRANSFER_MTRANSFER_HPP_
#define MTRANSFER_MTRANSFER_HPP_

#include "diagnostics.hpp"
#include "error.hpp"
#include "io.hpp"
#include "language.hpp"
#include "measure.hpp"
#include "morphism.hpp"
#include "rational.hpp"
#include "transfer.hpp"
#include "words.hpp"

#endif  // MTRANSFER_MTRANSFER_HPP_
