#pragma once

// Everything except report.hpp, which additionally needs nlohmann/json.

#include "hamkit/conditions.hpp"
#include "hamkit/error.hpp"
#include "hamkit/families.hpp"
#include "hamkit/graph.hpp"
#include "hamkit/harness.hpp"
#include "hamkit/insertion.hpp"
#include "hamkit/invariants.hpp"
#include "hamkit/io.hpp"
#include "hamkit/oracle.hpp"
#include "hamkit/rational.hpp"
