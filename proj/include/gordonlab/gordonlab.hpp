#pragma once

#include "gordonlab/cache.hpp"
#include "gordonlab/hilbert.hpp"
#include "gordonlab/hypergraph.hpp"
#include "gordonlab/json_io.hpp"
#include "gordonlab/partition.hpp"
#include "gordonlab/partition_classes.hpp"
#include "gordonlab/qseries.hpp"
#include "gordonlab/series.hpp"
#include "gordonlab/signature.hpp"
#include "gordonlab/verify.hpp"
