#pragma once

// Umbrella header.

#include "schurkit/abelian.hpp"
#include "schurkit/aut_split.hpp"
#include "schurkit/bigint.hpp"
#include "schurkit/clifford.hpp"
#include "schurkit/closure.hpp"
#include "schurkit/cocycle.hpp"
#include "schurkit/cohomology.hpp"
#include "schurkit/covers.hpp"
#include "schurkit/error.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_field.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/group_builders.hpp"
#include "schurkit/group_io.hpp"
#include "schurkit/groupspec.hpp"
#include "schurkit/intmatrix.hpp"
#include "schurkit/ktheory.hpp"
#include "schurkit/matrix_groups.hpp"
#include "schurkit/modmatrix.hpp"
#include "schurkit/numtheory.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/presentation.hpp"
#include "schurkit/report.hpp"
#include "schurkit/verify.hpp"
