#pragma once

// Umbrella header for the bntrend library: chi-squared burst detection of
// trending topics in date-stamped Bengali news corpora.

#include "bntrend/clusters.hpp"
#include "bntrend/commands.hpp"
#include "bntrend/corpus.hpp"
#include "bntrend/date.hpp"
#include "bntrend/error.hpp"
#include "bntrend/format.hpp"
#include "bntrend/ngram.hpp"
#include "bntrend/pipeline.hpp"
#include "bntrend/scoring.hpp"
#include "bntrend/stemmer.hpp"
#include "bntrend/stopwords.hpp"
#include "bntrend/svg.hpp"
#include "bntrend/text.hpp"
#include "bntrend/unicode.hpp"
#include "bntrend/window.hpp"
