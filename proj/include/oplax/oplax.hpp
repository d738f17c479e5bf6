#pragma once

#include "oplax/rational.hpp"
#include "oplax/scalars.hpp"
#include "oplax/weyl.hpp"
#include "oplax/parse.hpp"
#include "oplax/operad.hpp"
#include "oplax/report.hpp"
#include "oplax/oscillator.hpp"
#include "oplax/bianchi.hpp"
#include "oplax/jacobi.hpp"
#include "oplax/sampling.hpp"
