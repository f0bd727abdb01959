#pragma once

#include "drs/baselines.hpp"
#include "drs/checker.hpp"
#include "drs/clause.hpp"
#include "drs/codec.hpp"
#include "drs/embeddings.hpp"
#include "drs/errors.hpp"
#include "drs/io.hpp"
#include "drs/matcher.hpp"
#include "drs/naming.hpp"
#include "drs/phenomena.hpp"
#include "drs/pipeline.hpp"
#include "drs/significance.hpp"
#include "drs/stats.hpp"
