"""
Worker-count capping for the search harness. A requested worker count is clamped into [1, SEARCH_MAX_WORKERS]; when no count is requested the configured cap is used, which defaults to the number of physical cores.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from typing import Optional
from config import config as app_config

def cap_workers(requested: Optional[int]) -> int:
    maximum = int(app_config.SEARCH_MAX_WORKERS)
    resolved = int(requested) if requested is not None else maximum
    return max(1, min(resolved, maximum))
