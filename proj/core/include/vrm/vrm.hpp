#pragma once

#include "vrm/angle.hpp"
#include "vrm/arcs.hpp"
#include "vrm/collapse.hpp"
#include "vrm/errors.hpp"
#include "vrm/io.hpp"
#include "vrm/measure.hpp"
#include "vrm/persistence.hpp"
#include "vrm/quotient.hpp"
#include "vrm/retraction.hpp"
#include "vrm/transport.hpp"
