#pragma once

// Everything in one include.

#include <bimatrix/bidet.hpp>
#include <bimatrix/bioperator.hpp>
#include <bimatrix/core.hpp>
#include <bimatrix/errors.hpp>
#include <bimatrix/fuzzy.hpp>
#include <bimatrix/io.hpp>
#include <bimatrix/linalg.hpp>
#include <bimatrix/matrix.hpp>
#include <bimatrix/neutro.hpp>
#include <bimatrix/neutrosophic.hpp>
#include <bimatrix/polynomial.hpp>
#include <bimatrix/rational.hpp>
