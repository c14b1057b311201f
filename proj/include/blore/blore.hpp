#pragma once

#include "blore/block_reversal.hpp"
#include "blore/classifier.hpp"
#include "blore/eertree.hpp"
#include "blore/errors.hpp"
#include "blore/rational.hpp"
#include "blore/richness.hpp"
#include "blore/rle.hpp"
#include "blore/verifier.hpp"
#include "blore/word.hpp"
