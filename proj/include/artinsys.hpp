#ifndef ARTINSYS_HPP
#define ARTINSYS_HPP

#include "artinsys/errors.hpp"
#include "artinsys/dihedral_words.hpp"
#include "artinsys/simplicial_graph.hpp"
#include "artinsys/dihedral_complex.hpp"
#include "artinsys/link_analysis.hpp"
#include "artinsys/parallel.hpp"
#include "artinsys/lemma_suite.hpp"
#include "artinsys/gamma_assembly.hpp"
#include "artinsys/random_gamma.hpp"
#include "artinsys/serialize.hpp"

#endif  // ARTINSYS_HPP
