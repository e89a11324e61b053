#pragma once

#include "qdisc/catalog.hpp"
#include "qdisc/classes.hpp"
#include "qdisc/cli.hpp"
#include "qdisc/common.hpp"
#include "qdisc/grid.hpp"
#include "qdisc/io.hpp"
#include "qdisc/qcalc.hpp"
#include "qdisc/registry.hpp"
#include "qdisc/report.hpp"
#include "qdisc/series.hpp"
#include "qdisc/theorems.hpp"
