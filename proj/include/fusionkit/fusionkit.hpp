#pragma once

#include "fusionkit/errors.hpp"
#include "fusionkit/fixtures.hpp"
#include "fusionkit/galois.hpp"
#include "fusionkit/json_io.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/qdim.hpp"
#include "fusionkit/qseries.hpp"
#include "fusionkit/rational.hpp"
#include "fusionkit/spectral.hpp"
#include "fusionkit/verlinde.hpp"
