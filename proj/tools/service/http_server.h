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

#ifndef SPIRALTILE_TOOLS_SERVICE_HTTP_SERVER_H_
#define SPIRALTILE_TOOLS_SERVICE_HTTP_SERVER_H_

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace spiraltile::service {

// JSON-over-HTTP front end. POST /api/<endpoint> takes the same request
// document as the matching CLI subcommand; GET /api/health answers "ok".
class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Port 0 picks a free port. Returns the bound port or -1.
  int Bind(const std::string& host, int port);
  // Blocks until Stop(). Returns false if the socket could not serve.
  bool Serve();
  void Stop();
  void WaitUntilReady() const;

 private:
  std::unique_ptr<httplib::Server> server_;
};

// SPIRALTILE_PORT when set and valid, else 8080.
int DefaultPort();

}  // namespace spiraltile::service

#endif  // SPIRALTILE_TOOLS_SERVICE_HTTP_SERVER_H_
