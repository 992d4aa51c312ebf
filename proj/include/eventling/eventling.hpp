#pragma once

#include "eventling/error.hpp"
#include "eventling/fraction.hpp"
#include "eventling/region.hpp"
#include "eventling/step_function.hpp"
#include "eventling/vague.hpp"
#include "eventling/tnorm.hpp"
#include "eventling/eventology.hpp"
#include "eventling/syntagma.hpp"
#include "eventling/dataset.hpp"
#include "eventling/svg.hpp"
