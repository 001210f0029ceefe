#pragma once

#include "kernelcut/diophantine.hpp"
#include "kernelcut/errors.hpp"
#include "kernelcut/few_sizes.hpp"
#include "kernelcut/frank_tardos.hpp"
#include "kernelcut/ilp.hpp"
#include "kernelcut/io.hpp"
#include "kernelcut/lattice.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/numeric_kernels.hpp"
#include "kernelcut/oracles.hpp"
#include "kernelcut/polyprog.hpp"
#include "kernelcut/random.hpp"
#include "kernelcut/report.hpp"
#include "kernelcut/set_systems.hpp"
