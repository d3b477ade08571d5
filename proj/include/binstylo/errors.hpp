#pragma once

#include <stdexcept>
#include <string>

namespace binstylo {

// Base class for all data-level failures. The CLI maps these to exit code 2;
// anything else escaping to main is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BINSTYLO_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg)                        \
            : Error(std::string(#Name) + ": " + msg) {}              \
    }

// corpus
BINSTYLO_DEFINE_ERROR(MalformedManifest);
BINSTYLO_DEFINE_ERROR(MissingArtifact);
BINSTYLO_DEFINE_ERROR(DuplicateSampleId);
BINSTYLO_DEFINE_ERROR(InsufficientSamples);

// disasm
BINSTYLO_DEFINE_ERROR(UnrecognizedDialect);
BINSTYLO_DEFINE_ERROR(EmptyListing);
BINSTYLO_DEFINE_ERROR(MalformedCfg);

// features
BINSTYLO_DEFINE_ERROR(MissingCorpusStats);
BINSTYLO_DEFINE_ERROR(EmptyCorpus);

// infogain
BINSTYLO_DEFINE_ERROR(LengthMismatch);
BINSTYLO_DEFINE_ERROR(SingleClassCorpus);

// forest
BINSTYLO_DEFINE_ERROR(EmptyMatrix);
BINSTYLO_DEFINE_ERROR(VocabularyMismatch);
BINSTYLO_DEFINE_ERROR(BadN);
BINSTYLO_DEFINE_ERROR(BadThreshold);

// eval
BINSTYLO_DEFINE_ERROR(RowMisalignment);

#undef BINSTYLO_DEFINE_ERROR

} // namespace binstylo
