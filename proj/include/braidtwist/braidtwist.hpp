#pragma once

#include "braidtwist/braid_word.hpp"
#include "braidtwist/dehornoy.hpp"
#include "braidtwist/errors.hpp"
#include "braidtwist/families.hpp"
#include "braidtwist/fdtc.hpp"
#include "braidtwist/invariants.hpp"
#include "braidtwist/murasugi3.hpp"
#include "braidtwist/positive.hpp"
#include "braidtwist/qp.hpp"
#include "braidtwist/rational.hpp"
