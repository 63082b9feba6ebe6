#pragma once

#include "riesz_sharp/boundary.hpp"
#include "riesz_sharp/constants.hpp"
#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"
#include "riesz_sharp/minorants.hpp"
#include "riesz_sharp/psh.hpp"
#include "riesz_sharp/scan.hpp"
#include "riesz_sharp/testfam.hpp"
#include "riesz_sharp/version.hpp"
