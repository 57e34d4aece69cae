#pragma once

#include "audit.hpp"
#include "automorphism.hpp"
#include "builtin.hpp"
#include "category.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "field.hpp"
#include "functor.hpp"
#include "group.hpp"
#include "io.hpp"
#include "laws.hpp"
#include "morphism.hpp"
#include "morphism_type.hpp"
#include "products.hpp"
#include "records.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "run.hpp"
#include "semilinear.hpp"
#include "theorems.hpp"
