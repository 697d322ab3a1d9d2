#pragma once

#include "cumteam/bench.hpp"
#include "cumteam/circuit.hpp"
#include "cumteam/errors.hpp"
#include "cumteam/formula.hpp"
#include "cumteam/io.hpp"
#include "cumteam/oracle.hpp"
#include "cumteam/relmodel.hpp"
#include "cumteam/semantics.hpp"
#include "cumteam/succinct.hpp"
#include "cumteam/systemc.hpp"
#include "cumteam/teams.hpp"
