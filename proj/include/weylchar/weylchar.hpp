#ifndef WEYLCHAR_WEYLCHAR_HPP
#define WEYLCHAR_WEYLCHAR_HPP

// Umbrella header.

#include "bigint.hpp"
#include "characters.hpp"
#include "kostka.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "rootdata.hpp"
#include "serialize.hpp"
#include "series.hpp"
#include "weight.hpp"

#endif  // WEYLCHAR_WEYLCHAR_HPP
