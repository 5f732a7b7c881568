#pragma once

#include "rvdeg/analysis.hpp"
#include "rvdeg/cache.hpp"
#include "rvdeg/catalog.hpp"
#include "rvdeg/chartab.hpp"
#include "rvdeg/cli.hpp"
#include "rvdeg/classify.hpp"
#include "rvdeg/config.hpp"
#include "rvdeg/cyclotomic.hpp"
#include "rvdeg/errors.hpp"
#include "rvdeg/grp_format.hpp"
#include "rvdeg/modp.hpp"
#include "rvdeg/permcore.hpp"
#include "rvdeg/permutation.hpp"
#include "rvdeg/report.hpp"
#include "rvdeg/structure.hpp"
