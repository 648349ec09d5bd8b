#pragma once

// Umbrella header.

#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/core.hpp"
#include "rainbow/io.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/transforms.hpp"
#include "rainbow/verify.hpp"
