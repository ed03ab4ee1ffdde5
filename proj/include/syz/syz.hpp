#pragma once

#include "syz/field.hpp"
#include "syz/monomial.hpp"
#include "syz/order.hpp"
#include "syz/ring.hpp"
#include "syz/element.hpp"
#include "syz/polynomial.hpp"
#include "syz/module.hpp"
#include "syz/division.hpp"
#include "syz/groebner.hpp"
#include "syz/io.hpp"
#include "syz/syzygy.hpp"
#include "syz/resolution.hpp"
#include "syz/hilbert.hpp"
#include "syz/oracle.hpp"
#include "syz/ideal_ops.hpp"
#include "syz/regularity.hpp"
#include "syz/degeneration.hpp"
#include "syz/generators.hpp"
