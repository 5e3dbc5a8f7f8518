"""
Shared command-level error handling helpers.
Decorator mapping expected exceptions to process exit codes consistently across CLI subcommands.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from functools import wraps
from typing import Callable
import logging
import sys

from services.semigroups.errors import InvariantViolation

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_FIXTURE_FAILURE = 2
EXIT_INVARIANT_VIOLATION = 3


def handle_cli_errors(
    *,
    invalid_input_exceptions: tuple[type[Exception], ...] = (ValueError,),
    invalid_input_detail: str | None = None,
) -> Callable[[Callable[..., int]], Callable[..., int]]:

    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @wraps(func)
        def wrapper(*args: object, **kwargs: object) -> int:
            try:
                return func(*args, **kwargs)
            except InvariantViolation as exc:
                logger.exception("Invariant violated in %s: %s", func.__name__, exc)
                print(f"internal invariant violated: {exc}", file=sys.stderr)
                return EXIT_INVARIANT_VIOLATION
            except invalid_input_exceptions as exc:
                detail = invalid_input_detail or str(exc) or "Invalid input"
                logger.warning("Invalid input in %s: %s", func.__name__, exc)
                print(f"error: {detail}", file=sys.stderr)
                return EXIT_INVALID_INPUT
            except Exception as exc:  # pylint: disable=broad-exception-caught
                logger.exception("Unhandled exception in command %s: %s", func.__name__, exc)
                return EXIT_INVARIANT_VIOLATION

        return wrapper

    return decorator
