#ifndef QUDIT_QUDIT_HPP
#define QUDIT_QUDIT_HPP

#include "qudit/bounds.hpp"
#include "qudit/common.hpp"
#include "qudit/quasi.hpp"
#include "qudit/states.hpp"
#include "qudit/su_basis.hpp"
#include "qudit/superop.hpp"
#include "qudit/verdict.hpp"

#endif  // QUDIT_QUDIT_HPP
