#pragma once

#include "kei/enveloping.hpp"
#include "kei/error.hpp"
#include "kei/ev_group.hpp"
#include "kei/finite_group.hpp"
#include "kei/finite_quandle.hpp"
#include "kei/free_kei.hpp"
#include "kei/limits.hpp"
#include "kei/semidirect.hpp"
#include "kei/table_io.hpp"
#include "kei/word.hpp"
