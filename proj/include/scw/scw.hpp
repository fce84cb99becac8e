#pragma once

#include "error.hpp"
#include "color.hpp"
#include "polytope.hpp"
#include "canonical.hpp"
#include "locus.hpp"
#include "coloring.hpp"
#include "surgery.hpp"
#include "random.hpp"
#include "tree.hpp"
#include "decompose.hpp"
#include "cobordism.hpp"
#include "reconstruct.hpp"
#include "io.hpp"
