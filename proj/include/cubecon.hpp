#pragma once

#include "cubecon/ballots.hpp"
#include "cubecon/consensus.hpp"
#include "cubecon/errors.hpp"
#include "cubecon/gray_code.hpp"
#include "cubecon/lab/axioms.hpp"
#include "cubecon/lab/function.hpp"
#include "cubecon/lab/oracle.hpp"
#include "cubecon/lab/profile_space.hpp"
#include "cubecon/metrics.hpp"
#include "cubecon/profile.hpp"
#include "cubecon/vertex.hpp"
