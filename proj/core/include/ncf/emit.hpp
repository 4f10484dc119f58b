// Copyright 2026 The NCF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "ncf/circuit_ir.hpp"

namespace ncf {

enum class EmitFormat { Qasm, Json };

/// "qasm" or "json"; throws std::invalid_argument otherwise.
EmitFormat parse_emit_format(std::string_view name);

/// One line per gate: "h q[0];", "s q[1];", "sdg q[1];", "cx q[0],q[1];".
std::string emit_qasm(const CliffordCircuit &circuit);

/// Gate lines plus one "rot <pauli> <angle> q[..];" pragma per fused rotation.
std::string emit_qasm(const CompiledProgram &program);

std::string emit_json(const CompiledProgram &program);
std::string emit_json(const MetricsReport &report);

std::string emit(const CompiledProgram &program, EmitFormat format);

/// Inverse of emit_json(CompiledProgram). Throws ParseError on malformed input.
CompiledProgram load_program_json(std::string_view text);

}  // namespace ncf
