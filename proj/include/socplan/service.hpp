#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>

#include "json.hpp"
#include "socplan/plan_io.hpp"

namespace httplib {
class Server;
}

namespace socplan {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
  std::optional<long long> revision;  // echoed as ETag when set
};

// In-memory plan behind the HTTP API. Readers take an immutable snapshot;
// writers are serialized and publish a new snapshot with revision + 1.
class PlanService {
 public:
  struct Snapshot {
    PlanDocument document;
    long long revision = 1;
  };

  PlanService(PlanDocument document, std::string plan_path);

  std::shared_ptr<const Snapshot> snapshot() const;
  long long revision() const { return snapshot()->revision; }

  ServiceResponse get_plan() const;
  ServiceResponse get_matrix(const std::optional<std::string>& epsilon) const;
  ServiceResponse get_model(const std::string& model_id) const;
  // `expected_revision` is the raw If-Match header value.
  ServiceResponse patch_cell(const std::string& model_id, const std::string& category_id, const std::string& task_id,
                             const std::string& body, const std::optional<std::string>& expected_revision);
  ServiceResponse whatif(const std::string& model_id, const std::string& body) const;
  ServiceResponse diff(const std::optional<std::string>& a, const std::optional<std::string>& b) const;
  ServiceResponse sow(const std::string& model_id) const;
  ServiceResponse save();

 private:
  void publish(std::shared_ptr<const Snapshot> next);

  std::string plan_path_;
  mutable std::shared_mutex snapshot_mutex_;  // guards the pointer swap only
  std::mutex write_mutex_;                    // one mutation in flight
  std::shared_ptr<const Snapshot> snapshot_;
};

// JSON view of one cell with suggested and effective values.
nlohmann::json cell_view(const CellAssignment& cell);

// Registers every /api route on `server`, with CORS limited to loopback origins.
void install_routes(httplib::Server& server, PlanService& service);

bool is_loopback_origin(const std::string& origin);

// Blocks until the server stops. Returns a process exit code.
int serve(const std::string& plan_path, const std::string& host, int port, std::ostream& log);

}  // namespace socplan
