#pragma once

#include "cubecycle/assets.hpp"
#include "cubecycle/automorphism.hpp"
#include "cubecycle/core.hpp"
#include "cubecycle/embedding.hpp"
#include "cubecycle/oracle.hpp"
#include "cubecycle/sweeps.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"
