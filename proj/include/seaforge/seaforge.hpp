#pragma once

#include "seaforge/forge.hpp"
#include "seaforge/hull.hpp"
#include "seaforge/manifest.hpp"
#include "seaforge/ocean.hpp"
#include "seaforge/optics.hpp"
#include "seaforge/png_io.hpp"
#include "seaforge/render.hpp"
#include "seaforge/scene_grid.hpp"
#include "seaforge/sky.hpp"
#include "seaforge/sweep.hpp"
#include "seaforge/version.hpp"
