#pragma once

#include "noeth/error.hpp"
#include "noeth/value.hpp"
#include "noeth/carrier.hpp"
#include "noeth/relation.hpp"
#include "noeth/evidence.hpp"
#include "noeth/witnesses.hpp"
#include "noeth/transcript.hpp"
#include "noeth/games.hpp"
#include "noeth/convert.hpp"
#include "noeth/decider.hpp"
#include "noeth/stream.hpp"
#include "noeth/af.hpp"
#include "noeth/registry.hpp"
#include "noeth/lattice.hpp"
#include "noeth/json.hpp"
