#ifndef MARKOVHULL_IO_HPP
#define MARKOVHULL_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "markovhull/oset.hpp"

namespace markovhull {

// JSON formats. A matrix is {"alphabet": ["a", ...], "matrix": [[0/1, ...], ...]};
// an O-set is a list of {"s": "cb", "X": ["a","c"]} idempotents (the right
// word repeats the left one, so it is not written); a fingerprint maps
// "k" to a count. Certificates serialize every field the checker
// produced, so they can be replayed later without rerunning the search.
// All parse failures throw input_error.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

MatrixRef matrix_from_json_text(const std::string& text);
MatrixRef load_matrix(const std::string& path);
std::string matrix_to_json_text(const TransitionMatrix& T);

std::vector<CanonicalElement> oset_from_json_text(const MatrixRef& T, const std::string& text);
std::vector<CanonicalElement> load_oset(const MatrixRef& T, const std::string& path);
std::string oset_to_json_text(const std::vector<CanonicalElement>& O);

std::string fingerprint_to_json_text(const std::map<int, long>& hist);

std::string certificate_to_json_text(const Certificate& cert);

// Replays a serialized certificate: re-runs the checker on the stored
// matrix and O-set with the stored bound and demands the same verdict,
// alphabet, and induced matrix, then multiplies the stored witness
// expressions out of the stored alphabet and checks they hit the original
// letter maps. Returns false (with a reason in *why when given) on any
// mismatch.
bool replay_certificate_text(const std::string& text, std::string* why = nullptr);

} // namespace markovhull

#endif
