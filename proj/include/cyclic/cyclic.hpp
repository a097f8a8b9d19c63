#pragma once

#include "cyclic/core.hpp"
#include "cyclic/error.hpp"
#include "cyclic/identities.hpp"
#include "cyclic/polygon.hpp"
#include "cyclic/random.hpp"
