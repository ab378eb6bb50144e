#pragma once

#include <string>
#include <vector>

#include "tenrange/numrange.hpp"
#include "tenrange/tensor.hpp"

namespace tenrange::io {

// Tensor document: {"shape":[...],"row_modes":M,"data":[[re,im],...]} with
// data row-major. parse accepts any key order; serialize emits the canonical
// form, which round-trips byte-identically for finite doubles.
Tensor parse_tensor(const std::string& text);
std::string serialize_tensor(const Tensor& a);

Tensor read_tensor_file(const std::string& path);
void write_tensor_file(const std::string& path, const Tensor& a);

// CSV with header theta,support,re,im; 17 significant digits per field.
std::string boundary_csv(const numrange::Boundary& b);

// Self-contained SVG 1.1: the boundary as a closed polyline, eigenvalues as
// cross markers, 800x600 viewport with equal-aspect autoscaling, 5% margins.
std::string boundary_svg(const numrange::Boundary& b, const std::vector<scalar>& eigenvalues);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

std::string format_double(double v);  // 17 significant digits

}  // namespace tenrange::io
