#ifndef CIRCDIST_CIRCDIST_HPP_
#define CIRCDIST_CIRCDIST_HPP_

#include "circdist/automorphism.hpp"
#include "circdist/distinguishing.hpp"
#include "circdist/error.hpp"
#include "circdist/family.hpp"
#include "circdist/graph.hpp"
#include "circdist/io.hpp"
#include "circdist/labeling.hpp"
#include "circdist/permutation.hpp"

#endif  // CIRCDIST_CIRCDIST_HPP_
