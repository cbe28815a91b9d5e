#pragma once

#include <map>
#include <string>
#include <vector>

#include "ta/design.hpp"
#include "ta/io.hpp"

namespace ta {

/// Root of the bundled data directory. Resolution order: the TA_DATA_DIR
/// environment variable, then the compiled-in source-tree path.
std::string data_dir();
std::string data_path(const std::string& rel);

/// One entry of the fixture manifest (data/fixtures.txt): an id, the object
/// kind, a file path, the symbol base used in the file, and the expected
/// properties stated for it (verdicts, automorphism orders).
struct Fixture {
    std::string id;
    std::string kind; // design | resolution | uta | ta
    std::string path; // relative to the data dir
    int base = 0;
    std::map<std::string, std::string> expect;
};

std::vector<Fixture> list_fixtures();
const Fixture& fixture_info(const std::string& id);

/// Loads and verifies a fixture; throws if the object fails its verifier
/// (a mistyped transcription fails here).
AnyObject load_fixture(const std::string& id);

TripleArray load_fixture_ta(const std::string& id);
UnorderedTripleArray load_fixture_uta(const std::string& id);
BlockDesign load_fixture_design(const std::string& id);
Resolution load_fixture_resolution(const std::string& id);

/// Reads a file of concatenated designs in the design text format. Every
/// record must verify as a 2-design with the expected parameters (when
/// given); failures abort with a record diagnostic. Duplicate canonical
/// keys are reported through `notes` when provided.
std::vector<BlockDesign> ingest_designs(const std::string& path,
                                        const std::optional<TwoDesignParams>& expected = std::nullopt,
                                        std::vector<std::string>* notes = nullptr);

/// The seven Kirkman parades in the bundled label order
/// (1a, 1b, 7a, 7b, 19a, 19b, 61).
std::vector<std::pair<std::string, Resolution>> load_parades();

} // namespace ta
