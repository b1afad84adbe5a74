#pragma once

#include "broom_spectra.hpp"
#include "canonical.hpp"
#include "classifier.hpp"
#include "config.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "laplacian.hpp"
#include "rooted_tree.hpp"
#include "sym_matrix.hpp"
#include "unicyclic.hpp"
