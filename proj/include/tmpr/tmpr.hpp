#pragma once

#include "tmpr/bitvector.hpp"
#include "tmpr/bounds.hpp"
#include "tmpr/coloring.hpp"
#include "tmpr/errors.hpp"
#include "tmpr/exact.hpp"
#include "tmpr/factor_digraph.hpp"
#include "tmpr/interval.hpp"
#include "tmpr/monotone_ap.hpp"
#include "tmpr/morse_hedlund.hpp"
#include "tmpr/path_search.hpp"
#include "tmpr/stepup.hpp"
#include "tmpr/tower.hpp"
#include "tmpr/word.hpp"
