/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piiguard/types.hpp"

namespace piiguard {

struct Chunk {
  TextSpan span;        // includes the terminal separator byte, if any
  std::size_t index = 0;
  std::string terminal_separator;  // "" only for an unterminated final chunk
};

struct ChunkerOptions {
  // Single-byte separators; defaults are sentence enders plus newline.
  std::string separators = ".!?\n";
};

// Splits text into contiguous chunks: every byte belongs to exactly one
// chunk and concatenating the chunk texts reproduces the input. A '.' with
// a digit on both sides is a decimal point, not a separator.
std::vector<Chunk> segment(std::string_view text,
                           const ChunkerOptions& options = {});

// Index of the chunk containing byte `pos`. pos must be < total length.
std::size_t chunk_index_at(std::span<const Chunk> chunks, std::size_t pos);

// [first, last] chunk indices a span touches. span must be non-empty and
// inside the chunked text.
std::pair<std::size_t, std::size_t> chunk_range(std::span<const Chunk> chunks,
                                                const TextSpan& span);

// Byte span of `chunks[first-radius .. last+radius]`, clamped to the text.
TextSpan window_span(std::span<const Chunk> chunks, std::size_t first,
                     std::size_t last, std::size_t radius);

}  // namespace piiguard
