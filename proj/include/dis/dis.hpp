#pragma once

#include "dis/tree.hpp"
#include "dis/alternating.hpp"
#include "dis/rewrite.hpp"
#include "dis/classes.hpp"
#include "dis/certificate.hpp"
#include "dis/closure.hpp"
#include "dis/dyadic.hpp"
#include "dis/partition.hpp"
#include "dis/interval.hpp"
#include "dis/enumeration.hpp"
#include "dis/catalog.hpp"
#include "dis/search.hpp"
#include "dis/render.hpp"
