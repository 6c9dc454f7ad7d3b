#pragma once

#include "waring/apolarity.hpp"
#include "waring/binary.hpp"
#include "waring/border.hpp"
#include "waring/catalecticant.hpp"
#include "waring/cyclotomic.hpp"
#include "waring/eps.hpp"
#include "waring/error.hpp"
#include "waring/fixtures.hpp"
#include "waring/gad.hpp"
#include "waring/matrix.hpp"
#include "waring/oracles.hpp"
#include "waring/poly.hpp"
#include "waring/synthesis.hpp"
#include "waring/text_format.hpp"
