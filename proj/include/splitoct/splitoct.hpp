// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "splitoct/scalar_ring.hpp"
#include "splitoct/rational.hpp"
#include "splitoct/counting.hpp"
#include "splitoct/polynomial.hpp"
#include "splitoct/split_octonion.hpp"
#include "splitoct/cayley_table.hpp"
#include "splitoct/coeff_matrix.hpp"
#include "splitoct/schedule.hpp"
#include "splitoct/blocks.hpp"
#include "splitoct/random_gen.hpp"
#include "splitoct/octonion_text.hpp"
#include "splitoct/verify.hpp"
