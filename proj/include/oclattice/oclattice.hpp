#ifndef OCLATTICE_OCLATTICE_HPP
#define OCLATTICE_OCLATTICE_HPP

#include "error.hpp"
#include "words.hpp"
#include "equivalence.hpp"
#include "presentation.hpp"
#include "deciders.hpp"
#include "rewrite.hpp"
#include "perm.hpp"
#include "lattices.hpp"
#include "gsets.hpp"
#include "theoremcheck.hpp"

#endif // OCLATTICE_OCLATTICE_HPP
