// Copyright 2026 The CircIR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circir/ir/value.hpp"

#include <sstream>

#include "circir/ir/error.hpp"

namespace circir {

std::string_view to_string(ElemType elem) {
  return elem == ElemType::Int ? "int" : "bool";
}

std::size_t element_count(const Shape& shape) {
  std::size_t count = 1;
  for (auto dim : shape) {
    if (dim < 0) {
      fail(ErrorCode::ShapeMismatch, "negative array dimension " + std::to_string(dim));
    }
    count *= static_cast<std::size_t>(dim);
  }
  return count;
}

Value Value::of_int(std::int64_t v) { return Value(ElemType::Int, {}, {v}); }

Value Value::of_bool(bool v) { return Value(ElemType::Bool, {}, {v ? 1 : 0}); }

Value Value::array(ElemType elem, Shape shape, std::vector<std::int64_t> data) {
  if (element_count(shape) != data.size()) {
    fail(ErrorCode::ShapeMismatch, "array data has " + std::to_string(data.size()) +
                                       " elements but shape requires " +
                                       std::to_string(element_count(shape)));
  }
  if (elem == ElemType::Bool) {
    for (auto& x : data) {
      if (x != 0 && x != 1) fail(ErrorCode::TypeMismatch, "bool element outside {0,1}");
    }
  }
  return Value(elem, std::move(shape), std::move(data));
}

Value Value::zeros(ElemType elem, Shape shape) {
  auto n = element_count(shape);
  return Value(elem, std::move(shape), std::vector<std::int64_t>(n, 0));
}

std::int64_t Value::as_int() const {
  if (!is_scalar() || elem_ != ElemType::Int) {
    fail(ErrorCode::TypeMismatch, "expected int scalar, got " + to_string());
  }
  return data_[0];
}

bool Value::as_bool() const {
  if (!is_scalar() || elem_ != ElemType::Bool) {
    fail(ErrorCode::TypeMismatch, "expected bool scalar, got " + to_string());
  }
  return data_[0] != 0;
}

namespace {

void write_elem(std::ostream& os, ElemType elem, std::int64_t x) {
  if (elem == ElemType::Bool) {
    os << (x != 0 ? "true" : "false");
  } else {
    os << x;
  }
}

}  // namespace

std::string Value::to_string() const {
  std::ostringstream os;
  if (is_scalar()) {
    write_elem(os, elem_, data_[0]);
    return os.str();
  }
  os << circir::to_string(elem_) << '[';
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << ',';
    os << shape_[i];
  }
  os << "] [";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) os << ',';
    write_elem(os, elem_, data_[i]);
  }
  os << ']';
  return os.str();
}

std::size_t row_major_offset(const Shape& shape, std::span<const std::int64_t> indices) {
  std::size_t offset = 0;
  for (std::size_t d = 0; d < shape.size(); ++d) {
    offset = offset * static_cast<std::size_t>(shape[d]) + static_cast<std::size_t>(indices[d]);
  }
  return offset;
}

Value array_get(const Value& arr, std::span<const std::int64_t> indices) {
  if (indices.size() != arr.rank()) {
    fail(ErrorCode::RankMismatch, "expected " + std::to_string(arr.rank()) +
                                      " indices, got " + std::to_string(indices.size()));
  }
  for (std::size_t d = 0; d < indices.size(); ++d) {
    if (indices[d] < 0 || indices[d] >= arr.shape()[d]) {
      fail(ErrorCode::IndexOutOfBounds, "index " + std::to_string(indices[d]) +
                                            " out of bounds for dimension " +
                                            std::to_string(d) + " of size " +
                                            std::to_string(arr.shape()[d]));
    }
  }
  auto x = arr.data()[row_major_offset(arr.shape(), indices)];
  return arr.elem() == ElemType::Bool ? Value::of_bool(x != 0) : Value::of_int(x);
}

}  // namespace circir
