#pragma once

#include "topiso/formula.hpp"
#include "topiso/isotope_data.hpp"
#include "topiso/isotopologue_tree.hpp"
#include "topiso/loh.hpp"
#include "topiso/multinomial.hpp"
#include "topiso/pairwise_selector.hpp"
#include "topiso/peak.hpp"
