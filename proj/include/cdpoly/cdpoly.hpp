#ifndef CDPOLY_CDPOLY_HPP
#define CDPOLY_CDPOLY_HPP

#include "cdpoly/batch.hpp"
#include "cdpoly/corpus.hpp"
#include "cdpoly/enumerate.hpp"
#include "cdpoly/gpoly.hpp"
#include "cdpoly/graph.hpp"
#include "cdpoly/identities.hpp"
#include "cdpoly/io.hpp"
#include "cdpoly/isomorphism.hpp"
#include "cdpoly/poly.hpp"
#include "cdpoly/real_roots.hpp"
#include "cdpoly/report_json.hpp"

#endif  // CDPOLY_CDPOLY_HPP
