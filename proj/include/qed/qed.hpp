#pragma once

#include "qed/canonical.hpp"
#include "qed/connectivity.hpp"
#include "qed/cycles.hpp"
#include "qed/embedding.hpp"
#include "qed/families.hpp"
#include "qed/io.hpp"
#include "qed/multidigraph.hpp"
#include "qed/obstruction.hpp"
#include "qed/rotation.hpp"
#include "qed/search.hpp"
#include "qed/transform.hpp"
