#pragma once

#include "scalar.hpp"
#include "polynomial.hpp"
#include "linalg.hpp"
#include "polymap.hpp"
#include "torus.hpp"
#include "derivation.hpp"
#include "locally_finite.hpp"
#include "rng.hpp"
#include "centralizer.hpp"
#include "tame.hpp"
#include "io.hpp"
#include "lemma_suite.hpp"
