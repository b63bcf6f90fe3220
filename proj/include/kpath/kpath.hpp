//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "kpath/augment.hpp"
#include "kpath/datagen.hpp"
#include "kpath/dataset.hpp"
#include "kpath/differential.hpp"
#include "kpath/encoder.hpp"
#include "kpath/graph.hpp"
#include "kpath/losses.hpp"
#include "kpath/metrics.hpp"
#include "kpath/mp_count.hpp"
#include "kpath/oracle.hpp"
#include "kpath/parallel.hpp"
#include "kpath/random_graph.hpp"
#include "kpath/rng.hpp"
#include "kpath/scenarios.hpp"
#include "kpath/tuples.hpp"
