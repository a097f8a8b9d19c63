#pragma once

#include "cyclic/polygon/closed_form.hpp"
#include "cyclic/polygon/cyclic_polygon.hpp"
#include "cyclic/polygon/solver.hpp"
