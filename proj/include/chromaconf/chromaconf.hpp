#ifndef CHROMACONF_CHROMACONF_HPP
#define CHROMACONF_CHROMACONF_HPP

// Umbrella header.

#include "chromaconf/bond_lattice.hpp"
#include "chromaconf/chromatic.hpp"
#include "chromaconf/errors.hpp"
#include "chromaconf/forests.hpp"
#include "chromaconf/graph.hpp"
#include "chromaconf/guards.hpp"
#include "chromaconf/json_io.hpp"
#include "chromaconf/obstacles.hpp"
#include "chromaconf/poincare.hpp"
#include "chromaconf/polynomial.hpp"
#include "chromaconf/simplicial.hpp"

#endif
