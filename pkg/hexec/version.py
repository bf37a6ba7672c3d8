# Copyright (c) 2026 The hexec Authors. All rights reserved.
VERSION = "1.0.0"
ID = "hexec"
NAME = "H-expression Executor"

# Set MINIMUM_SUPPORTED_VERSION and MAXIMUM_SUPPORTED_VERSION
# to the inclusive range of supported hexec_version or None if
# there is no bound.
MINIMUM_SUPPORTED_VERSION = "1.0.0"
MAXIMUM_SUPPORTED_VERSION = "1.0.0"
