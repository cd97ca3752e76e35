/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "piiguard/chunker.hpp"

#include <algorithm>

#include "piiguard/errors.hpp"

namespace piiguard {

std::vector<Chunk> segment(std::string_view text, const ChunkerOptions& options) {
  std::vector<Chunk> chunks;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (options.separators.find(c) == std::string::npos) continue;
    // Decimal points stay inside their chunk: "12.5" never splits.
    if (c == '.' && i > 0 && i + 1 < text.size() &&
        text[i - 1] >= '0' && text[i - 1] <= '9' &&
        text[i + 1] >= '0' && text[i + 1] <= '9') {
      continue;
    }
    chunks.push_back({{start, i + 1}, chunks.size(), std::string(1, c)});
    start = i + 1;
  }
  if (start < text.size())
    chunks.push_back({{start, text.size()}, chunks.size(), ""});
  return chunks;
}

std::size_t chunk_index_at(std::span<const Chunk> chunks, std::size_t pos) {
  auto it = std::partition_point(
      chunks.begin(), chunks.end(),
      [pos](const Chunk& c) { return c.span.end <= pos; });
  if (it == chunks.end() || !it->span.contains(pos))
    throw ArgumentError("byte offset " + std::to_string(pos) +
                        " is outside the chunked text");
  return it->index;
}

std::pair<std::size_t, std::size_t> chunk_range(std::span<const Chunk> chunks,
                                                const TextSpan& span) {
  if (span.end <= span.start)
    throw ArgumentError("chunk_range requires a non-empty span");
  return {chunk_index_at(chunks, span.start),
          chunk_index_at(chunks, span.end - 1)};
}

TextSpan window_span(std::span<const Chunk> chunks, std::size_t first,
                     std::size_t last, std::size_t radius) {
  if (chunks.empty() || first > last || last >= chunks.size())
    throw ArgumentError("window_span given an invalid chunk range");
  std::size_t lo = first > radius ? first - radius : 0;
  std::size_t hi = std::min(last + radius, chunks.size() - 1);
  return {chunks[lo].span.start, chunks[hi].span.end};
}

}  // namespace piiguard
