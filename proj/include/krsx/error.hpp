#pragma once

#include <stdexcept>
#include <string>

namespace krsx {

// Failure kinds surfaced by the extraction stages. The cascade keys its
// fallback decisions on these, so they are part of the module contracts.
enum class Err {
  // pdf ingestion
  NotAPdf,
  EncryptedPdf,
  NoTextContent,
  UnsupportedFeature,
  RegionNotFound,
  // record serialization
  MalformedRecord,
  SchemaViolation,
  // lattice extraction
  NoGrid,
  DegenerateGrid,
  OrphanOverflow,
  // shared row parsing
  HeaderNotFound,
  EmptyTable,
  // stream extraction
  ColumnsNotSeparable,
  // llm client
  Timeout,
  EndpointUnavailable,
  RuntimeFailure,
  NoPayload,
  MalformedPayload,
  ContractViolation,
  // orchestration & tooling
  IngestFailed,
  InvalidSpec,
  LayoutOverflow,
  MissingLabel,
  BadConfig,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(detail.empty() ? std::string(err_name(code))
                                          : std::string(err_name(code)) + ": " + detail),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail = {}) {
  throw Error(code, detail);
}

}  // namespace krsx
