#pragma once

#include "cyclic/core/geometry.hpp"
#include "cyclic/core/model_point.hpp"
#include "cyclic/core/stereographic.hpp"
