#pragma once

#include "hypertorsion/embedding.hpp"
#include "hypertorsion/families.hpp"
#include "hypertorsion/field.hpp"
#include "hypertorsion/io.hpp"
#include "hypertorsion/jacobian.hpp"
#include "hypertorsion/numtheory.hpp"
#include "hypertorsion/pairing.hpp"
#include "hypertorsion/poly.hpp"
#include "hypertorsion/torsion.hpp"
