#pragma once

#include "toric_split/errors.hpp"
#include "toric_split/field.hpp"
#include "toric_split/sparse_matrix.hpp"
#include "toric_split/exact_linalg.hpp"
#include "toric_split/simplicial.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/rzk.hpp"
#include "toric_split/cai_dga.hpp"
#include "toric_split/decomposition.hpp"
#include "toric_split/graph_assoc.hpp"
#include "toric_split/io.hpp"
