#pragma once

#include "cyclic/identities/builtins.hpp"
#include "cyclic/identities/chord_identity.hpp"
#include "cyclic/identities/evaluate.hpp"
#include "cyclic/identities/gregorac.hpp"
#include "cyclic/identities/verify.hpp"
