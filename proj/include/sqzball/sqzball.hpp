#pragma once

#include "construct.hpp"
#include "cyclic.hpp"
#include "faces.hpp"
#include "io.hpp"
#include "posets.hpp"
#include "squeezed.hpp"
#include "verify.hpp"
