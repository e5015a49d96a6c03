#pragma once

#include "frobius/axioms.hpp"
#include "frobius/brauer.hpp"
#include "frobius/error.hpp"
#include "frobius/matrix.hpp"
#include "frobius/normal_form.hpp"
#include "frobius/normalizer.hpp"
#include "frobius/onecob.hpp"
#include "frobius/parse.hpp"
#include "frobius/perm.hpp"
#include "frobius/properties.hpp"
#include "frobius/random.hpp"
#include "frobius/serialize.hpp"
#include "frobius/skeleton.hpp"
#include "frobius/term.hpp"
#include "frobius/tqft.hpp"
