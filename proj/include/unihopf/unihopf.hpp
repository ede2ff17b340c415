#pragma once

// Umbrella header: exact-arithmetic Hopf algebras of unipotent fundamental
// groups from quadratic data (H¹, H², cup product).

#include "unihopf/cli.hpp"
#include "unihopf/comodule.hpp"
#include "unihopf/conil.hpp"
#include "unihopf/errors.hpp"
#include "unihopf/free_shuffle.hpp"
#include "unihopf/heisenberg.hpp"
#include "unihopf/hopf.hpp"
#include "unihopf/hopf_json.hpp"
#include "unihopf/matrix.hpp"
#include "unihopf/positional.hpp"
#include "unihopf/quadratic.hpp"
#include "unihopf/rational.hpp"
#include "unihopf/specfile.hpp"
#include "unihopf/subspace.hpp"
#include "unihopf/tower.hpp"
#include "unihopf/words.hpp"
