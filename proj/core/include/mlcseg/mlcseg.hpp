#pragma once

#include "mlcseg/complexity.hpp"
#include "mlcseg/decomposition.hpp"
#include "mlcseg/engel.hpp"
#include "mlcseg/error.hpp"
#include "mlcseg/instances.hpp"
#include "mlcseg/io.hpp"
#include "mlcseg/matrix.hpp"
#include "mlcseg/neighborhood.hpp"
#include "mlcseg/pareto.hpp"
#include "mlcseg/segment.hpp"
#include "mlcseg/sequencing.hpp"
