#pragma once

#include "blockarg/aba.hpp"
#include "blockarg/config.hpp"
#include "blockarg/constraints.hpp"
#include "blockarg/dot.hpp"
#include "blockarg/dsl.hpp"
#include "blockarg/errors.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/json_io.hpp"
#include "blockarg/labels.hpp"
#include "blockarg/model.hpp"
#include "blockarg/oracle.hpp"
#include "blockarg/position.hpp"
#include "blockarg/semantics.hpp"
#include "blockarg/solver.hpp"
#include "blockarg/standard.hpp"
