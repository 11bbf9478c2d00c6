#pragma once

#include "pbmo/bitstring.hpp"
#include "pbmo/dominance.hpp"
#include "pbmo/evolve.hpp"
#include "pbmo/figures.hpp"
#include "pbmo/landscape.hpp"
#include "pbmo/objectives.hpp"
#include "pbmo/oracles.hpp"
#include "pbmo/problems.hpp"
#include "pbmo/rational.hpp"
#include "pbmo/verification.hpp"
