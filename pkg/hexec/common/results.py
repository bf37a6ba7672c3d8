# Copyright (c) 2026 The hexec Authors. All rights reserved.
# NOTE:
# Do not import external packages in common modules.
# Only import hexec modules that are also in common.

from logging import ERROR, WARNING

# Result/exception codes.
# Use a specific derived HexecException**** class to raise errors.
# Result codes double as process exit codes for the command line.

# The section between the BEGIN/END markers is the documented list of exit
# codes, mirrored in README.md. Comments starting with "## " are group headings.

# -- RESULT CODES BEGIN --

# Success/OK.
RESULT_OK = 0

## Item-level failures 1.

# One or more items failed to parse, validate, execute or convert.
RESULT_ITEM_FAILURE = 1

## Configuration and IO failures 2.

# Misformed or unexpected argument, unusable config file or unreadable input.
RESULT_CONFIG_ERROR = 2

## Unexpected failures 3.

# Unexpected issue within hexec.
RESULT_INTERNAL_ERROR = 3

# -- RESULT CODES END --

# Build a reverse lookup to get string name from result code.
result_strings = {}
local_vars = locals().copy()
for k, v in local_vars.items():
    if k.startswith("RESULT_"):
        result_strings[v] = k


def result_to_string(result_code):
    return result_strings[result_code]


PREFIX_TEXT = "hexec Exception "
POSTFIX_TEXT = "hexec.log may contain additional debug information."


# The base HexecException class from which we derive specific coded exceptions.
class HexecException(Exception):
    result_code: int = RESULT_INTERNAL_ERROR

    # By default, derived exceptions expect logger.exception( ) to
    # be used to surface the exception. Alternatively, if the derived
    # exception declares a specific log_with_level then the exception
    # can be suppressed in favour of logger.log( ) at the declared level.
    log_with_level = None

    def __init__(self, *args: object) -> None:
        self.message = " ".join(str(a) for a in args)
        super().__init__(*args)

    def __str__(self) -> str:
        header = f"{PREFIX_TEXT}{result_to_string(self.result_code)} ({self.result_code})"
        if self.result_code == RESULT_INTERNAL_ERROR:
            return f"{header}: {self.message} {POSTFIX_TEXT}"
        return f"{header}: {self.message}"


# Errors that are not expected and for which the full stack is output.


class HexecExceptionInternalError(HexecException):
    result_code = RESULT_INTERNAL_ERROR


# Configuration and IO errors.
# These are logged but the full stack is suppressed.


class HexecExceptionArgumentsError(HexecException):
    result_code = RESULT_CONFIG_ERROR
    log_with_level = ERROR


class HexecExceptionConfigError(HexecException):
    result_code = RESULT_CONFIG_ERROR
    log_with_level = ERROR


class HexecExceptionInputError(HexecException):
    result_code = RESULT_CONFIG_ERROR
    log_with_level = ERROR


# Item-level errors.
# Batch commands record these per item and carry on.


class HexecExceptionParseError(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = WARNING

    def __init__(self, reason: str, position: int) -> None:
        self.reason = reason
        self.position = position
        super().__init__(f"{reason} at position {position}")


class HexecExceptionMissingSlot(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = WARNING

    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Answer slot {index} has not been filled")


class HexecExceptionNotNumeric(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = WARNING

    def __init__(self, text: str) -> None:
        self.text = text
        super().__init__(f"'{text}' is not numeric")


class HexecExceptionReaderError(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = ERROR


class HexecExceptionReaderUnavailable(HexecExceptionReaderError):
    pass


class HexecExceptionProtocolError(HexecExceptionReaderError):
    pass


class HexecExceptionRecordError(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = WARNING

    def __init__(self, record_id: str, reason: str) -> None:
        self.record_id = record_id
        super().__init__(f"Record {record_id}: {reason}")


class HexecExceptionUnsupportedShape(HexecExceptionRecordError):
    pass


class HexecExceptionUnsupportedReasoningType(HexecExceptionRecordError):
    pass


class HexecExceptionAllCandidatesFailed(HexecException):
    result_code = RESULT_ITEM_FAILURE
    log_with_level = WARNING

    # attempts: per-candidate diagnostics (dicts as written to the trace).
    # result: the last hard-failed ExecutionResult.
    def __init__(self, attempts: list, result=None) -> None:
        self.attempts = attempts
        self.result = result
        super().__init__(f"All {len(attempts)} candidate expressions failed")
