#pragma once

#include "otk/errors.hpp"
#include "otk/polyring.hpp"
#include "otk/linalg.hpp"
#include "otk/matroid.hpp"
#include "otk/groebner.hpp"
#include "otk/hilbert.hpp"
#include "otk/algebras.hpp"
#include "otk/verify.hpp"
#include "otk/corpus.hpp"
#include "otk/report.hpp"
