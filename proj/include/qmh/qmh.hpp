#pragma once

#include "qmh/engine.hpp"
#include "qmh/findim.hpp"
#include "qmh/io.hpp"
#include "qmh/laurent.hpp"
#include "qmh/matrix.hpp"
#include "qmh/modp.hpp"
#include "qmh/oracle.hpp"
#include "qmh/qma.hpp"
#include "qmh/verify.hpp"
