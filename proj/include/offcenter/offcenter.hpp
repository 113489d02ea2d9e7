#pragma once

#include "offcenter/angle.hpp"
#include "offcenter/atlas.hpp"
#include "offcenter/csv.hpp"
#include "offcenter/diagram.hpp"
#include "offcenter/map_core.hpp"
#include "offcenter/oracles.hpp"
#include "offcenter/orbit.hpp"
#include "offcenter/parallel.hpp"
#include "offcenter/roots.hpp"
#include "offcenter/verify.hpp"
