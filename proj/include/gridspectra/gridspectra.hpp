#pragma once

#include "gridspectra/cliques.hpp"
#include "gridspectra/error.hpp"
#include "gridspectra/graph.hpp"
#include "gridspectra/graph_io.hpp"
#include "gridspectra/isomorphism.hpp"
#include "gridspectra/lines.hpp"
#include "gridspectra/matrix.hpp"
#include "gridspectra/pipeline.hpp"
#include "gridspectra/reconstruct.hpp"
#include "gridspectra/regularity.hpp"
#include "gridspectra/report.hpp"
#include "gridspectra/spectrum.hpp"
#include "gridspectra/spectrum_search.hpp"
