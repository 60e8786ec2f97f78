#pragma once

#include <stdexcept>
#include <string>

namespace seopinion {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

namespace ingest {

// The page's Title rule matched nothing; callers treat the page as not a product page.
class NoTitleError : public Error {
public:
    using Error::Error;
};

class UnknownSiteError : public Error {
public:
    using Error::Error;
};

}  // namespace ingest

namespace nlp {

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

}  // namespace nlp

namespace hae {

class EmptyAspectSet : public Error {
public:
    using Error::Error;
};

}  // namespace hae

namespace haos {

class UntrainedModel : public Error {
public:
    using Error::Error;
};

class DegenerateData : public Error {
public:
    using Error::Error;
};

}  // namespace haos

namespace summary {

class EmptyAspect : public Error {
public:
    using Error::Error;
};

}  // namespace summary

namespace eval {

class TooFewExamples : public Error {
public:
    using Error::Error;
};

class DegenerateData : public Error {
public:
    using Error::Error;
};

}  // namespace eval

}  // namespace seopinion
