#pragma once
// Umbrella header.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/hasse.hpp>
#include <fbase/hyper_box.hpp>
#include <fbase/numeral.hpp>
#include <fbase/sequence.hpp>
#include <fbase/tiling.hpp>
#include <fbase/zeckendorf.hpp>
