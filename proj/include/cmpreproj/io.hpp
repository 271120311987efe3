#pragma once

#include <string>

#include "cmpreproj/module.hpp"

namespace cmpreproj {

std::string read_file(const std::string& path);

// algebra from the presentation text format
template <class F>
AlgPtr<F> algebra_from_text(const F& f, const std::string& text, const std::string& name);
template <class F>
AlgPtr<F> load_algebra(const F& f, const std::string& path);

// Direct sum of summands, one per block:
//   projective 2 | injective 1 | simple 2   (1-based vertices)
//   module 2 3                               (dimension vector) followed by arrow lines
//   a: 1 0 0; 0 1 0                          (rows separated by ';', unlisted arrows act by 0)
template <class F>
Mod<F> module_from_text(const AlgPtr<F>& a, const std::string& text);

}  // namespace cmpreproj
