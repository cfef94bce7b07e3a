#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "semgraph/errors.hpp"
#include "semgraph/taxonomy.hpp"

namespace semgraph {

/// Axis-aligned box in normalized image coordinates.
struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  bool contains(const Eigen::Vector2d& p) const {
    return p.x() >= x_min && p.x() <= x_max && p.y() >= y_min && p.y() <= y_max;
  }
  Eigen::Vector2d center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
  void validate() const;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct DetectionAttribute {
  ConceptKind kind = ConceptKind::Color;  // material, shape or color
  std::string value;
  double score = 0.0;

  friend bool operator==(const DetectionAttribute&, const DetectionAttribute&) = default;
};

struct Detection {
  std::string label;  // raw detector label; taxonomy resolution happens later
  double score = 0.0;
  BoundingBox bbox;
  std::vector<DetectionAttribute> attributes;

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct FrameDetections {
  std::string frame_id;
  std::vector<Detection> detections;

  friend bool operator==(const FrameDetections&, const FrameDetections&) = default;
};

/// Receives human-readable diagnostics (clamped scores, dropped labels).
using WarningSink = std::function<void(const std::string&)>;

/// Source of per-frame detections; the seam between the local pipeline and
/// the remote perception branch.
class VisionProvider {
 public:
  virtual ~VisionProvider() = default;
  virtual FrameDetections detect(const std::string& frame_id,
                                 const std::filesystem::path& image_ref) = 0;
};

/// Replay file schema <-> FrameDetections. Parsing clamps scores into [0,1]
/// and lowercases labels.
FrameDetections parse_replay_json(const nlohmann::json& doc, const WarningSink& warn = {});
nlohmann::json to_replay_json(const FrameDetections& fd);

/// Drops detections scoring below min_score.
FrameDetections filter_by_score(FrameDetections fd, double min_score);

/// Reads stored `<dir>/<frame_id>.json` files; deterministic and thread-safe.
class ReplayProvider : public VisionProvider {
 public:
  explicit ReplayProvider(std::filesystem::path dir, WarningSink warn = {});
  FrameDetections detect(const std::string& frame_id,
                         const std::filesystem::path& image_ref) override;

 private:
  std::filesystem::path dir_;
  WarningSink warn_;
};

/// Maps provider label tokens onto attribute kinds (value sets per kind).
class KeywordTable {
 public:
  static KeywordTable defaults();
  static KeywordTable load(const nlohmann::json& doc);

  void add(ConceptKind kind, const std::string& token);
  /// Returns the kind for a (normalized) token, or nullopt when unmapped.
  std::optional<ConceptKind> classify(const std::string& token) const;

 private:
  std::map<std::string, ConceptKind> token_to_kind_;
};

/// Parses a cloud vision style response body: localized object annotations
/// (name, score, normalized vertices) become detections; label annotations
/// that match the keyword table become attributes on every detection of the
/// frame; everything else is dropped with a warning. Labels pass through raw.
FrameDetections parse_vision_response(const std::string& body, const KeywordTable& keywords,
                                      const std::string& frame_id, const WarningSink& warn = {});

/// Minimal HTTP seam so tests can fake the transport.
struct HttpResponse {
  int status = 0;
  std::string body;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  /// POSTs a JSON body; throws NetworkError on transport failure.
  virtual HttpResponse post(const std::string& url, const std::string& body,
                            const std::map<std::string, std::string>& headers) = 0;
};

/// Default transport backed by cpp-httplib.
std::unique_ptr<HttpTransport> make_httplib_transport();

struct RemoteConfig {
  std::string endpoint;  // e.g. https://vision.example.com/v1/images:annotate
  std::string api_key;   // usually from SEMGRAPH_VISION_KEY
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  double requests_per_second = 2.0;
  KeywordTable keywords = KeywordTable::defaults();
};

/// Spaces out request starts to at most requests_per_second.
class RateLimiter {
 public:
  explicit RateLimiter(double requests_per_second);
  void acquire();

 private:
  std::chrono::steady_clock::duration interval_;
  std::chrono::steady_clock::time_point next_;
  std::mutex mutex_;
};

/// Cloud-vision HTTP client: posts base64 image content, retries transport
/// failures with exponential backoff, and normalizes the parsed response.
class RemoteProvider : public VisionProvider {
 public:
  RemoteProvider(RemoteConfig config, WarningSink warn = {},
                 std::unique_ptr<HttpTransport> transport = nullptr);

  FrameDetections detect(const std::string& frame_id,
                         const std::filesystem::path& image_ref) override;

  /// The full client-side parse of a response body, exactly as detect()
  /// applies it (vision-schema parse + label normalization).
  static FrameDetections parse_detect_body(const std::string& body, const KeywordTable& keywords,
                                           const std::string& frame_id,
                                           const WarningSink& warn = {});

 private:
  RemoteConfig config_;
  WarningSink warn_;
  std::unique_ptr<HttpTransport> transport_;
  RateLimiter limiter_;
};

struct RecordFailure {
  std::string frame_id;
  std::string reason;
};

struct RecordResult {
  int frames_written = 0;
  std::vector<RecordFailure> failures;
};

/// Runs the provider over (frame_id, image path) pairs and stores one replay
/// file per frame under out_dir, plus a manifest listing any failures.
RecordResult record_session(VisionProvider& provider,
                            std::span<const std::pair<std::string, std::filesystem::path>> frames,
                            const std::filesystem::path& out_dir);

}  // namespace semgraph
