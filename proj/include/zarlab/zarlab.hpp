#ifndef ZARLAB_ZARLAB_HPP_
#define ZARLAB_ZARLAB_HPP_

#include "zarlab/dehn.hpp"
#include "zarlab/presentation.hpp"
#include "zarlab/rng.hpp"
#include "zarlab/suites.hpp"
#include "zarlab/text.hpp"
#include "zarlab/word.hpp"
#include "zarlab/word_maps.hpp"
#include "zarlab/zero_monoid.hpp"

#endif  // ZARLAB_ZARLAB_HPP_
