#pragma once

#include "colorcomp/bfile.hpp"
#include "colorcomp/bijection.hpp"
#include "colorcomp/core.hpp"
#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"
#include "colorcomp/serialize.hpp"
