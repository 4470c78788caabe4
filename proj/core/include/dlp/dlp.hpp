#pragma once

#include "dlp/analysis.hpp"
#include "dlp/atom_set.hpp"
#include "dlp/error.hpp"
#include "dlp/formulas.hpp"
#include "dlp/ontology.hpp"
#include "dlp/parser.hpp"
#include "dlp/program.hpp"
#include "dlp/sat.hpp"
#include "dlp/semantics.hpp"
#include "dlp/solver.hpp"
#include "dlp/vocabulary.hpp"
