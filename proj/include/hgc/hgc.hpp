#pragma once

#include "hgc/containers.hpp"
#include "hgc/errors.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/instances.hpp"
#include "hgc/invariants.hpp"
#include "hgc/oracle.hpp"
#include "hgc/rational.hpp"
#include "hgc/scythe.hpp"
#include "hgc/vertex_set.hpp"
