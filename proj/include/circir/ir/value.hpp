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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace circir {

enum class ElemType : std::uint8_t { Int, Bool };

std::string_view to_string(ElemType elem);

using Shape = std::vector<std::int64_t>;

/// A runtime value: a row-major array of scalars sharing one element type.
/// Scalars are zero-dimensional arrays, so `Value::of_int(3)` and an `int[]`
/// array holding 3 are the same value. Booleans are stored as 0/1.
class Value {
 public:
  Value() : Value(of_int(0)) {}

  static Value of_int(std::int64_t v);
  static Value of_bool(bool v);
  /// Throws ShapeMismatch when the element count does not match the shape.
  static Value array(ElemType elem, Shape shape, std::vector<std::int64_t> data);
  /// Array of the given shape filled with the element type's zero.
  static Value zeros(ElemType elem, Shape shape);

  [[nodiscard]] ElemType elem() const noexcept { return elem_; }
  [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
  [[nodiscard]] const std::vector<std::int64_t>& data() const noexcept { return data_; }
  [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
  [[nodiscard]] bool is_scalar() const noexcept { return shape_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

  /// Scalar accessors; throw TypeMismatch on a non-scalar or wrong type.
  [[nodiscard]] std::int64_t as_int() const;
  [[nodiscard]] bool as_bool() const;

  /// Textual form shared by scripts and traces: `7`, `true`,
  /// `int[2,2] [1,2,3,4]`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Value(ElemType elem, Shape shape, std::vector<std::int64_t> data)
      : elem_(elem), shape_(std::move(shape)), data_(std::move(data)) {}

  ElemType elem_;
  Shape shape_;
  std::vector<std::int64_t> data_;
};

/// Number of elements of a shape; throws ShapeMismatch on negative dims.
std::size_t element_count(const Shape& shape);

/// Row-major element lookup. Zero-rank arrays accept the empty index list.
Value array_get(const Value& arr, std::span<const std::int64_t> indices);

/// Row-major offset of an in-range index vector.
std::size_t row_major_offset(const Shape& shape, std::span<const std::int64_t> indices);

}  // namespace circir
