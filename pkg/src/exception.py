import sys
from typing import Optional

from src.logger import logging


def error_message_detail(error, error_detail: sys):
    _, _, exc_tb = error_detail.exc_info()
    if exc_tb is not None:
        while exc_tb.tb_next is not None:
            exc_tb = exc_tb.tb_next
        file_name = exc_tb.tb_frame.f_code.co_filename
        line_number = exc_tb.tb_lineno
    else:
        # raised directly, not re-raised from an except block
        frame = sys._getframe(2)
        file_name = frame.f_code.co_filename
        line_number = frame.f_lineno
    error_message = "Error occurred in python script name [{0}] line number [{1}] error message [{2}]".format(
        file_name, line_number, str(error)
    )
    return error_message


class CustomException(Exception):
    """
    Base error of the engine. Carries the script/line detail of the
    failure, an optional pipeline stage label and the CLI exit code.
    """

    exit_code = 3

    def __init__(self, error_message, error_detail: sys = sys, stage: Optional[str] = None):
        super().__init__(error_message)
        self.raw_message = str(error_message)
        self.stage = stage
        self.error_message = error_message_detail(error_message, error_detail)
        logging.getLogger(__name__).debug(self.error_message)

    def __str__(self):
        if self.stage:
            return f"[stage {self.stage}] {self.raw_message}"
        return self.raw_message

    @property
    def detail(self) -> str:
        return self.error_message


class UsageError(CustomException):
    exit_code = 2


class UnknownGroupError(UsageError):
    pass


class GroupSpecParseError(UsageError):
    """Malformed group-spec document; line and column are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}", sys, stage="parse")


class OrderCapExceeded(CustomException):
    pass


class SubgroupCapExceeded(CustomException):
    pass


class NonInvertibleGenerator(CustomException):
    pass


class InvariantViolation(CustomException):
    pass


class LatticeMembershipError(CustomException):
    pass


class PrimeSearchExhausted(CustomException):
    pass


class CharacterLiftError(CustomException):
    pass


class SchurIndexMismatch(CustomException):
    pass
