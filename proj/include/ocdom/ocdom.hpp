#pragma once

#include "ocdom/bits.hpp"
#include "ocdom/cert_cache.hpp"
#include "ocdom/checks.hpp"
#include "ocdom/corpus.hpp"
#include "ocdom/generators.hpp"
#include "ocdom/graph.hpp"
#include "ocdom/graph6.hpp"
#include "ocdom/graph_io.hpp"
#include "ocdom/products.hpp"
#include "ocdom/solvers.hpp"
#include "ocdom/suite.hpp"
#include "ocdom/witnesses.hpp"
