/*
 *  Copyright 2026 The hybridseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace hybridseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input stream or dataset was empty where content is required.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// Configuration value out of range, unknown key, missing file, bad field.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Data too short for the requested operation (batching, clustering, ...).
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between model parameters and inputs.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// All-zero likelihood row in a forward pass; the model cannot explain the data.
class DegenerateLikelihood : public Error {
 public:
  using Error::Error;
};

/// Non-finite value produced during training or evaluation.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint file has an unsupported version or malformed contents.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

/// Requested tool mode is incompatible with the checkpoint kind.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridseq
