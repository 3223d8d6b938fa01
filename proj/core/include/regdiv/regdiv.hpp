#pragma once

#include "regdiv/analysis.hpp"
#include "regdiv/bfile.hpp"
#include "regdiv/common.hpp"
#include "regdiv/divisors.hpp"
#include "regdiv/pairtree.hpp"
#include "regdiv/sequence.hpp"
