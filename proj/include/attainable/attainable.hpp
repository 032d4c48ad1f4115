#pragma once

#include "attainable/partition.hpp"
#include "attainable/enumerate.hpp"
#include "attainable/power_series.hpp"
#include "attainable/triangular.hpp"
#include "attainable/group_invariants.hpp"
#include "attainable/class_group.hpp"
#include "attainable/report_io.hpp"
