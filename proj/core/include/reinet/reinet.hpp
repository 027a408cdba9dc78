#pragma once

#include "reinet/dynamics.hpp"
#include "reinet/enumeration.hpp"
#include "reinet/three_node.hpp"
#include "reinet/linalg.hpp"
#include "reinet/network.hpp"
#include "reinet/ode_equiv.hpp"
#include "reinet/synchrony.hpp"
