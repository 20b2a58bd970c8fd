#include "focalis.h"

#include <string>

#include "focalis/error.hpp"
#include "focalis/job.hpp"

struct focalis_result {
  focalis::ResultDocument result;
  std::string document;
  std::string error_code;
  std::string error_message;
  std::string samples;
};

extern "C" {

focalis_status focalis_run_job(const char* job_text,
                               focalis_result** out_result) {
  auto* r = new focalis_result();
  if (!job_text) {
    r->error_code = "PARSE_ERROR";
    r->error_message = "null job text";
    r->document = "{\"status\":\"error\"}";
    r->result.exit_code = 2;
    *out_result = r;
    return FOCALIS_PARSE_ERROR;
  }
  try {
    focalis::Job job = focalis::parse_job(job_text);
    r->result = focalis::run_job(job);
  } catch (const focalis::Error& e) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["status"] = "error";
    doc["error"] = {{"code", e.name()}, {"message", e.what()}};
    r->result.doc = doc;
    r->result.exit_code = e.exit_code();
  } catch (const std::exception& e) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["status"] = "error";
    doc["error"] = {{"code", "INTERNAL"}, {"message", e.what()}};
    r->result.doc = doc;
    r->result.exit_code = 4;
  }
  r->document = r->result.to_string();
  if (r->result.exit_code != 0) {
    const auto& doc = r->result.doc;
    if (doc.contains("error")) {
      r->error_code = doc["error"].value("code", "INTERNAL");
      r->error_message = doc["error"].value("message", "");
    }
  }
  *out_result = r;
  return (focalis_status)r->result.exit_code;
}

const char* focalis_result_document(const focalis_result* r) {
  return r ? r->document.c_str() : nullptr;
}

const char* focalis_result_error_code(const focalis_result* r) {
  if (!r || r->error_code.empty()) return nullptr;
  return r->error_code.c_str();
}

const char* focalis_result_error_message(const focalis_result* r) {
  if (!r || r->error_code.empty()) return nullptr;
  return r->error_message.c_str();
}

int focalis_result_status(const focalis_result* r) {
  return r ? r->result.exit_code : 4;
}

const char* focalis_result_samples(focalis_result* r, int count,
                                   const char* fmt, int precision) {
  if (!r) return nullptr;
  try {
    r->samples = focalis::emit_samples(r->result, count,
                                       fmt ? fmt : "csv", precision);
  } catch (const std::exception&) {
    return nullptr;
  }
  return r->samples.c_str();
}

void focalis_result_free(focalis_result* r) { delete r; }

const char* focalis_version(void) { return "0.1.0"; }

}  // extern "C"
