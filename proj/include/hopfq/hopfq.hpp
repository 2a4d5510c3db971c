#pragma once

#include "hopfq/scalar.hpp"
#include "hopfq/linear_map.hpp"
#include "hopfq/report.hpp"
#include "hopfq/structures.hpp"
#include "hopfq/loops.hpp"
#include "hopfq/twist.hpp"
#include "hopfq/smash.hpp"
#include "hopfq/io.hpp"
