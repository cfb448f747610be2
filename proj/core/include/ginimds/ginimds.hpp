#pragma once

#include "ginimds/data.hpp"
#include "ginimds/embed.hpp"
#include "ginimds/error.hpp"
#include "ginimds/eval.hpp"
#include "ginimds/metrics.hpp"
#include "ginimds/parallel.hpp"
#include "ginimds/rng.hpp"
#include "ginimds/tune.hpp"
#include "ginimds/version.hpp"
