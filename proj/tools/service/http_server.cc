// Copyright 2026 The Spiraltile Authors.
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

#include "service/http_server.h"

#include <cstdlib>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "service/api.h"

namespace spiraltile::service {
namespace {

void WriteJson(httplib::Response& res, int status, const nlohmann::json& j) {
  res.status = status;
  res.set_content(Dump(j), "application/json");
}

void HandlePost(const httplib::Request& req, httplib::Response& res) {
  const std::string name = req.matches[1];
  const auto endpoint = ParseEndpoint(name);
  if (!endpoint) {
    WriteJson(res, 404,
              {{"status", "error"},
               {"error",
                {{"code", "NotFound"},
                 {"message", "unknown endpoint /api/" + name}}}});
    return;
  }
  nlohmann::json request;
  try {
    request = nlohmann::json::parse(req.body.empty() ? "{}" : req.body);
  } catch (const nlohmann::json::parse_error& e) {
    WriteJson(res, 400,
              {{"status", "error"},
               {"error",
                {{"code", "InvalidArgument"},
                 {"field", "body"},
                 {"message", std::string("malformed JSON: ") + e.what()}}}});
    return;
  }
  const Response out = Handle(*endpoint, request);
  res.status = out.http_status();
  res.set_content(out.Text(), out.content_type());
}

}  // namespace

HttpService::HttpService() : server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers(
      {{"Access-Control-Allow-Origin", "*"},
       {"Access-Control-Allow-Headers", "Content-Type"},
       {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server_->Get("/api/health", [](const httplib::Request&,
                                 httplib::Response& res) {
    WriteJson(res, 200, {{"status", "ok"}});
  });
  server_->Post(R"(/api/([a-z]+))", HandlePost);
  server_->Options(R"(/api/.*)", [](const httplib::Request&,
                                    httplib::Response& res) {
    res.status = 204;
  });
}

HttpService::~HttpService() { Stop(); }

int HttpService::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::Serve() { return server_->listen_after_bind(); }

void HttpService::Stop() {
  if (server_->is_running()) server_->stop();
}

void HttpService::WaitUntilReady() const { server_->wait_until_ready(); }

int DefaultPort() {
  if (const char* env = std::getenv("SPIRALTILE_PORT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 65536) {
      return static_cast<int>(v);
    }
  }
  return 8080;
}

}  // namespace spiraltile::service
