#pragma once

#include "gaussknot/gauss_code.hpp"
#include "oracles.hpp"

inline oracle::Seq seq(const gaussknot::GaussCode& c) { return {c.begin(), c.end()}; }
inline gaussknot::GaussCode code(const oracle::Seq& s) { return gaussknot::GaussCode(std::vector<gaussknot::Entry>(s.begin(), s.end())); }

inline gaussknot::GaussCode random_code(std::size_t n, std::mt19937_64& rng) { return code(oracle::random_code(n, rng)); }
