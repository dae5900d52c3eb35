#pragma once

#include "fjh/error.hpp"
#include "fjh/group.hpp"
#include "fjh/subgroups.hpp"
#include "fjh/descriptor.hpp"
#include "fjh/matched_pair.hpp"
#include "fjh/character_table.hpp"
#include "fjh/catalog.hpp"
#include "fjh/fusion_ring.hpp"
#include "fjh/grading.hpp"
#include "fjh/series.hpp"
#include "fjh/constructors.hpp"
#include "fjh/json_io.hpp"
