#pragma once

#include "fibmulti/types.hpp"
#include "fibmulti/core_sequences.hpp"
#include "fibmulti/binomial_engine.hpp"
#include "fibmulti/identities.hpp"
#include "fibmulti/verify_harness.hpp"
#include "fibmulti/report.hpp"
