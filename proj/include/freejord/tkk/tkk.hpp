#pragma once

#include "freejord/tkk/algebra.hpp"
#include "freejord/tkk/derivations.hpp"
#include "freejord/tkk/free_jordan.hpp"
#include "freejord/tkk/homology.hpp"
#include "freejord/tkk/tag.hpp"
