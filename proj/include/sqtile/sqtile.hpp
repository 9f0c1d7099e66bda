#pragma once

#include "sqtile/core.hpp"
#include "sqtile/search.hpp"
#include "sqtile/theory.hpp"
#include "sqtile/construct.hpp"
#include "sqtile/closure.hpp"
#include "sqtile/render.hpp"
