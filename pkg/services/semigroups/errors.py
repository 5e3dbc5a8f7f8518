"""
Exception hierarchy for semigroup computations. Input problems derive from `ValueError` so the CLI maps them to "invalid input"; contradictions of the underlying theory derive from `RuntimeError` and are reported as internal invariant violations.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations


class SemigroupError(ValueError):
    pass


class InvalidGeneratorsError(SemigroupError):
    pass


class NotInSemigroupError(SemigroupError):
    def __init__(self, value: int, key: str) -> None:
        super().__init__(f"{value} is not an element of <{key}>")
        self.value = value
        self.key = key


class NotInDhError(SemigroupError):
    def __init__(self, value: int, level: int) -> None:
        super().__init__(f"{value} is not in D_{level}")
        self.value = value
        self.level = level


class InvalidLevelError(SemigroupError):
    pass


class RepresentationLimitError(SemigroupError):
    pass


class InvariantViolation(RuntimeError):
    """Raised when a computed object contradicts a proven property."""


class SearchConstraintsError(ValueError):
    pass
