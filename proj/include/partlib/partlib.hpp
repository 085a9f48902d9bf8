// Umbrella header for the recurrence-sequence library.
#pragma once

#include "partlib/charact.hpp"
#include "partlib/digits.hpp"
#include "partlib/errors.hpp"
#include "partlib/eval.hpp"
#include "partlib/json_io.hpp"
#include "partlib/kspec.hpp"
#include "partlib/levels.hpp"
#include "partlib/oracle.hpp"
#include "partlib/rank.hpp"
#include "partlib/report.hpp"
#include "partlib/rings.hpp"
#include "partlib/search.hpp"
#include "partlib/table.hpp"
#include "partlib/triple.hpp"
