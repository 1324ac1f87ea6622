#pragma once

#include "wcage/canonical.hpp"
#include "wcage/catalog.hpp"
#include "wcage/checked.hpp"
#include "wcage/constructions.hpp"
#include "wcage/extension.hpp"
#include "wcage/factorization.hpp"
#include "wcage/girth.hpp"
#include "wcage/graph.hpp"
#include "wcage/moore.hpp"
#include "wcage/naive.hpp"
#include "wcage/report.hpp"
#include "wcage/results.hpp"
#include "wcage/search.hpp"
#include "wcage/split.hpp"
#include "wcage/wgf.hpp"
